#include <cmath>

#include "doctest.h"
#include "mutvis/generator.hpp"
#include "mutvis/geodesic.hpp"

using namespace mutvis;

namespace {

SimplePolygon square() {
    return SimplePolygon::validate(
        {Point{0, 0}, Point{10, 0}, Point{10, 10}, Point{0, 10}});
}

SimplePolygon lshape() {
    return SimplePolygon::validate({Point{0, 0}, Point{10, 0}, Point{10, 10},
                                    Point{6, 10}, Point{6, 4}, Point{0, 4}});
}

GeodesicPath funnel(const SimplePolygon& p, const Point& s, const Point& t) {
    Triangulation tri = p.triangulate();
    return shortest_path_funnel(p, tri, s, t);
}

}  // namespace

TEST_CASE("straight path in a convex polygon") {
    SimplePolygon p = square();
    GeodesicPath want{{Point{1, 1}, Point{9, 9}}};
    CHECK(funnel(p, Point{1, 1}, Point{9, 9}) == want);
    CHECK(shortest_path_vgraph(p, Point{1, 1}, Point{9, 9}) == want);
}

TEST_CASE("L-shaped polygon bends at the reflex vertex") {
    SimplePolygon p = lshape();
    GeodesicPath want{{Point{1, 3}, Point{6, 4}, Point{9, 9}}};
    CHECK(funnel(p, Point{1, 3}, Point{9, 9}) == want);
    CHECK(shortest_path_vgraph(p, Point{1, 3}, Point{9, 9}) == want);
}

TEST_CASE("vertical segment inside the left arm stays straight") {
    SimplePolygon p = lshape();
    GeodesicPath want{{Point{1, 1}, Point{1, 3}}};
    CHECK(shortest_path_vgraph(p, Point{1, 1}, Point{1, 3}) == want);
}

TEST_CASE("zero-length path") {
    SimplePolygon p = square();
    GeodesicPath got = funnel(p, Point{5, 5}, Point{5, 5});
    CHECK(got.waypoints == std::vector<Point>{Point{5, 5}});
    CHECK(path_length(got) == 0.0);
}

TEST_CASE("exterior endpoints are rejected") {
    SimplePolygon p = square();
    Triangulation tri = p.triangulate();
    CHECK_THROWS_AS(shortest_path_funnel(p, tri, Point{-1, 5}, Point{5, 5}), Error);
    CHECK_THROWS_AS(shortest_path_vgraph(p, Point{5, 5}, Point{11, 5}), Error);
}

TEST_CASE("path_length sums Euclidean distances") {
    CHECK(path_length(GeodesicPath{{Point{0, 0}, Point{3, 4}}}) == doctest::Approx(5.0));
    CHECK(path_length(GeodesicPath{{Point{5, 5}}}) == 0.0);
    CHECK(path_length(GeodesicPath{{Point{1, 3}, Point{6, 4}, Point{9, 9}}}) ==
          doctest::Approx(std::sqrt(26.0) + std::sqrt(34.0)));
}

TEST_CASE("canonicalize drops zero moves and collinear runs") {
    GeodesicPath raw{{Point{0, 0}, Point{0, 0}, Point{1, 1}, Point{2, 2}, Point{5, 2}}};
    GeodesicPath want{{Point{0, 0}, Point{2, 2}, Point{5, 2}}};
    CHECK(canonicalize(raw) == want);
}

TEST_CASE("funnel equals the visibility-graph oracle on random instances") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Instance inst = generate_instance(4 + static_cast<int>(seed % 20),
                                          1 + static_cast<int>(seed % 5), seed);
        Triangulation tri = inst.polygon.triangulate();
        VisibilityGraph vg(inst.polygon);
        for (int i = 0; i < inst.robot_count(); ++i) {
            GeodesicPath f =
                shortest_path_funnel(inst.polygon, tri, inst.starts[i], inst.targets[i]);
            GeodesicPath o = vg.shortest_path(inst.starts[i], inst.targets[i]);
            REQUIRE(f == o);
            // symmetry of the geodesic
            GeodesicPath back =
                shortest_path_funnel(inst.polygon, tri, inst.targets[i], inst.starts[i]);
            REQUIRE(back.reversed() == f);
        }
    }
}

TEST_CASE("triangle inequality through a random midpoint") {
    SimplePolygon p = lshape();
    Triangulation tri = p.triangulate();
    Point s{1, 1}, t{9, 9};
    for (const Point& x : {Point{3, 2}, Point{6, 4}, Point{8, 1}, Point{7, 8}}) {
        double direct = path_length(shortest_path_funnel(p, tri, s, t));
        double via = path_length(shortest_path_funnel(p, tri, s, x)) +
                     path_length(shortest_path_funnel(p, tri, x, t));
        CHECK(direct <= via * (1 + 1e-9));
    }
}
