#include <algorithm>

#include "doctest.h"
#include "mutvis/crossing.hpp"
#include "mutvis/io.hpp"

using namespace mutvis;

namespace {

Instance fixture(const char* name) {
    return load_instance(std::string(MUTVIS_FIXTURES_DIR "/") + name);
}

Rational rat(long long p, long long q) { return Rational(p) / Rational(q); }

// (segment index, parameter) of p along the polyline, for ordering checks
std::pair<size_t, Rational> locate_on(const GeodesicPath& path, const Point& p) {
    for (size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
        Segment e{path.waypoints[i], path.waypoints[i + 1]};
        if (point_on_segment(p, e)) return {i, param_along(e.a, e.b, p)};
    }
    FAIL("point is not on the polyline");
    return {0, 0};
}

}  // namespace

TEST_CASE("hexagon fixture decomposes around the origin") {
    Instance inst = hexagon_fixture(rat(1, 10));
    CrossingDecomposition dec = decompose(inst);
    CHECK(dec.q == Point{0, 0});
    REQUIRE(dec.regions.size() == 4);
    REQUIRE(dec.partition.size() == 4);
    // robots travelling v1 -> v6 belong to R1, robots v4 -> v3 to R3
    CHECK(dec.partition[0] == std::vector<int>{0, 1});
    CHECK(dec.partition[2] == std::vector<int>{2, 3});
    CHECK(dec.partition[1].empty());
    CHECK(dec.partition[3].empty());
    // arms meet at q
    for (const RegionDescriptor& r : dec.regions) {
        CHECK(r.arm1.b == dec.q);
        CHECK(r.arm2.b == dec.q);
        CHECK(r.chain.waypoints.front() == r.arm1.a);
        CHECK(r.chain.waypoints.back() == r.arm2.a);
    }
}

TEST_CASE("every robot geodesic is inside its assigned closed region") {
    for (const char* name : {"hex_cross.json", "stuck.json", "convex_cross.json"}) {
        Instance inst = fixture(name);
        CrossingDecomposition dec = decompose(inst);
        Triangulation tri = inst.polygon.triangulate();
        for (int r = 0; r < 4; ++r) {
            for (int i : dec.partition[r]) {
                GeodesicPath path = shortest_path_funnel(inst.polygon, tri,
                                                         inst.starts[i], inst.targets[i]);
                for (const Point& p : path.waypoints)
                    CHECK(dec.regions[r].boundary.locate(p) != PointLocation::Exterior);
                for (size_t k = 0; k + 1 < path.waypoints.size(); ++k) {
                    Point mid = lerp(path.waypoints[k], path.waypoints[k + 1],
                                     Rational(1, 2));
                    CHECK(dec.regions[r].boundary.locate(mid) != PointLocation::Exterior);
                }
            }
        }
    }
}

TEST_CASE("decompose rejects non-crossing instances") {
    Instance inst = fixture("square.json");
    CHECK_THROWS_AS(decompose(inst), Error);
}

TEST_CASE("hexagon fixture JSON matches the built-in construction") {
    Instance file = fixture("hex_cross.json");
    Instance built = hexagon_fixture(rat(1, 10));
    CHECK(serialize_instance(file) == serialize_instance(built));
}

TEST_CASE("strip width shrinks with the pinch") {
    CHECK_THROWS_AS(strip_width(Rational(0)), Error);
    CHECK_THROWS_AS(strip_width(Rational(-1)), Error);
    CHECK_THROWS_AS(hexagon_fixture(Rational(1)), Error);

    double w10 = strip_width(rat(1, 10));
    double w20 = strip_width(rat(1, 20));
    double w40 = strip_width(rat(1, 40));
    double w80 = strip_width(rat(1, 80));
    CHECK(w10 > 0);
    CHECK(w10 > w20);
    CHECK(w20 > w40);
    CHECK(w40 > w80);
    CHECK(w20 / w40 == doctest::Approx(2.0).epsilon(0.2));
    // hexagon S runs from (-4,1) to (4,-1); the strip through (0,+-eps) has
    // width 2*eps*8/|S| = 16*eps/sqrt(68)
    CHECK(w10 == doctest::Approx(1.6 / std::sqrt(68.0)));
}

TEST_CASE("critical_points on axis-aligned input") {
    GeodesicPath chain{{Point{0, 1}, Point{1, 1}, Point{2, 3}}};
    GeodesicPath carrier{{Point{0, 0}, Point{2, 2}}};
    CHECK(critical_points(chain, {Point{0, 1}, Point{1, 1}}, carrier) == Point{1, 1});

    SUBCASE("blocking edge must be a chain edge") {
        CHECK_THROWS_AS(critical_points(chain, {Point{0, 1}, Point{2, 3}}, carrier),
                        Error);
    }
    SUBCASE("missing intersection is an error") {
        GeodesicPath far{{Point{5, 7}, Point{6, 9}}};
        CHECK_THROWS_AS(critical_points(chain, {Point{0, 1}, Point{1, 1}}, far), Error);
    }
}

TEST_CASE("stuck fixture critical points and their ordering") {
    Instance inst = fixture("stuck.json");
    Triangulation tri = inst.polygon.triangulate();
    auto geo = [&](const Point& s, const Point& t) {
        return shortest_path_funnel(inst.polygon, tri, s, t);
    };
    Point a{-600, 600}, b{600, -600}, c{470, 188}, d{-470, -188};
    Point u{-280, 180}, v{-356, -24}, vp{-250, 340}, up{50, 220};
    Point w{50, -10}, wp{35, -50};

    GeodesicPath pi1 = geo(a, d), pi2 = geo(a, c), pi3 = geo(b, c), pi4 = geo(b, d);
    CHECK(pi1.waypoints == std::vector<Point>{a, u, v, d});
    CHECK(pi2.waypoints == std::vector<Point>{a, vp, up, c});
    CHECK(pi3.waypoints == std::vector<Point>{b, w, c});
    CHECK(pi4.waypoints == std::vector<Point>{b, wp, d});

    Point x = critical_points(pi1, {u, v}, pi2);
    Point y = critical_points(pi3, {b, w}, pi2);
    Point xp = critical_points(pi2, {vp, up}, pi1);
    Point yp = critical_points(pi4, {b, wp}, pi1);

    CHECK(x == Point{rat(-65700, 293), rat(96600, 293)});
    CHECK(y == Point{rat(-42600, 127), rat(51240, 127)});
    CHECK(xp == Point{rat(-34200, 73), rat(31200, 73)});
    CHECK(yp == Point{rat(-310200, 613), rat(292200, 613)});

    // the impossibility kernel: y strictly before x along pi2, and y' strictly
    // before x' along pi1 (exact polyline-parameter comparison)
    CHECK(locate_on(pi2, y) < locate_on(pi2, x));
    CHECK(locate_on(pi1, yp) < locate_on(pi1, xp));
}

TEST_CASE("rotating line gets stuck on the stuck fixture") {
    Instance inst = fixture("stuck.json");
    for (int steps : {8, 64, 1024}) {
        RotatingLineOutcome out = rotating_line_run(inst, steps);
        auto* stuck = std::get_if<RunStuck>(&out);
        REQUIRE_MESSAGE(stuck != nullptr, "steps = " << steps);
        CHECK(stuck->witness.first >= 0);
        CHECK(stuck->witness.second < inst.robot_count());
        CHECK(stuck->witness.first != stuck->witness.second);
        // the pinned-vs-blocked conflict involves robot 1 (start a, target c)
        CHECK((stuck->witness.first == 1 || stuck->witness.second == 1));
    }
}

TEST_CASE("rotating line completes on benign crossing instances") {
    Instance convex = fixture("convex_cross.json");
    CHECK(std::holds_alternative<RunCompleted>(rotating_line_run(convex, 64)));

    // single robot: no pairs to block
    SimplePolygon p = SimplePolygon::validate(
        {Point{0, 0}, Point{10, 0}, Point{10, 10}, Point{0, 10}});
    Instance one = make_instance(p, Segment{Point{1, 1}, Point{9, 9}},
                                 Segment{Point{1, 9}, Point{9, 1}},
                                 {Robot{Point{1, 1}, Point{9, 1}}});
    CHECK(std::holds_alternative<RunCompleted>(rotating_line_run(one, 64)));
}

TEST_CASE("rotating line input validation") {
    Instance inst = fixture("stuck.json");
    CHECK_THROWS_AS(rotating_line_run(inst, 4), Error);
    CHECK_THROWS_AS(rotating_line_run(fixture("square.json"), 64), Error);
}
