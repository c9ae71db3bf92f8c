#include "doctest.h"
#include "mutvis/io.hpp"
#include "mutvis/scheduler.hpp"

using namespace mutvis;

namespace {

Instance fixture(const char* name) {
    return load_instance(std::string(MUTVIS_FIXTURES_DIR "/") + name);
}

}  // namespace

TEST_CASE("waypoint picks the furthest intersection along the path") {
    Segment sweep{Point{0, 2}, Point{10, 8}};
    CHECK(waypoint(GeodesicPath{{Point{0, 8}, Point{10, 8}}}, sweep) == Point{10, 8});
    CHECK(waypoint(GeodesicPath{{Point{0, 2}, Point{10, 2}}}, sweep) == Point{0, 2});
    CHECK(waypoint(GeodesicPath{{Point{5, 5}}}, Segment{Point{5, 5}, Point{5, 5}}) ==
          Point{5, 5});
}

TEST_CASE("waypoint reports disjoint inputs") {
    GeodesicPath path{{Point{0, 0}, Point{1, 0}}};
    CHECK_THROWS_AS(waypoint(path, Segment{Point{5, 5}, Point{6, 6}}), Error);
}

TEST_CASE("square instance solves in two steps") {
    Instance inst = fixture("square.json");
    Solution sol = solve(inst);
    CHECK(sol.schedule.sweeps.size() == 3);  // K = 2
    REQUIRE(sol.schedule.case_tags.size() == 2);
    CHECK(sol.schedule.case_tags[0] == CaseTag::Init);
    REQUIRE(sol.trajectories.size() == 2);
    for (const Trajectory& tr : sol.trajectories) {
        REQUIRE(tr.waypoints.size() == 3);
        CHECK(tr.waypoints.front() == inst.starts[tr.robot_index]);
        CHECK(tr.waypoints.back() == inst.targets[tr.robot_index]);
        // horizontal geodesics: every waypoint keeps the robot's y
        for (const Point& w : tr.waypoints)
            CHECK(w.y == inst.starts[tr.robot_index].y);
    }
}

TEST_CASE("waypoints sit on their sweeps and advance monotonically") {
    Instance inst = fixture("pinched.json");
    Solution sol = solve(inst);
    const auto& sweeps = sol.schedule.sweeps;
    for (const Trajectory& tr : sol.trajectories) {
        REQUIRE(tr.waypoints.size() == sweeps.size());
        for (size_t k = 0; k < sweeps.size(); ++k) {
            if (sweeps[k].degenerate())
                CHECK(tr.waypoints[k] == sweeps[k].a);
            else
                CHECK(point_on_segment(tr.waypoints[k], sweeps[k]));
        }
    }
}

TEST_CASE("pinched instance has a step where all robots coincide") {
    Instance inst = fixture("pinched.json");
    Solution sol = solve(inst);
    bool coincide = false;
    for (size_t k = 0; k < sol.schedule.sweeps.size(); ++k) {
        bool all_same = true;
        for (const Trajectory& tr : sol.trajectories)
            if (tr.waypoints[k] != sol.trajectories[0].waypoints[k]) all_same = false;
        if (all_same && sol.trajectories[0].waypoints[k] == Point{6, 4}) coincide = true;
    }
    CHECK(coincide);
}

TEST_CASE("single robot with straight visibility") {
    SimplePolygon p = SimplePolygon::validate(
        {Point{0, 0}, Point{10, 0}, Point{10, 10}, Point{0, 10}});
    Instance inst = make_instance(p, Segment{Point{0, 8}, Point{0, 2}},
                                  Segment{Point{10, 8}, Point{10, 2}},
                                  {Robot{Point{0, 5}, Point{10, 5}}});
    Solution sol = solve(inst);
    REQUIRE(sol.trajectories.size() == 1);
    GeodesicPath norm = canonicalize(GeodesicPath{sol.trajectories[0].waypoints});
    CHECK(norm == GeodesicPath{{Point{0, 5}, Point{10, 5}}});
}

TEST_CASE("solve rejects crossing instances") {
    Instance inst = fixture("convex_cross.json");
    CHECK_THROWS_AS(solve(inst), Error);
    try {
        solve(inst);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CrossingInstance);
    }
}

TEST_CASE("case tags match sweep degeneracy") {
    Instance inst = fixture("pinched.json");
    Solution sol = solve(inst);
    const auto& sweeps = sol.schedule.sweeps;
    const auto& tags = sol.schedule.case_tags;
    REQUIRE(tags.size() + 1 == sweeps.size());
    CHECK(tags[0] == CaseTag::Init);
    for (size_t k = 1; k < tags.size(); ++k) {
        bool from_deg = sweeps[k].degenerate();
        bool to_deg = sweeps[k + 1].degenerate();
        CaseTag want = from_deg ? (to_deg ? CaseTag::A : CaseTag::B)
                                : (to_deg ? CaseTag::C : CaseTag::D);
        CHECK(tags[k] == want);
    }
}

TEST_CASE("positions_at interpolates the global clock") {
    Instance inst = fixture("square.json");
    Solution sol = solve(inst);
    int K = static_cast<int>(sol.schedule.sweeps.size()) - 1;

    auto starts = positions_at(sol.trajectories, Rational(0));
    CHECK(starts[0] == inst.starts[0]);
    CHECK(starts[1] == inst.starts[1]);

    auto ends = positions_at(sol.trajectories, Rational(K));
    CHECK(ends[0] == inst.targets[0]);
    CHECK(ends[1] == inst.targets[1]);

    auto mid = positions_at(sol.trajectories, Rational(1, 2));
    for (size_t i = 0; i < mid.size(); ++i) {
        Point a = sol.trajectories[i].waypoints[0];
        Point b = sol.trajectories[i].waypoints[1];
        CHECK(mid[i] == lerp(a, b, Rational(1, 2)));
    }

    CHECK_THROWS_AS(positions_at(sol.trajectories, Rational(-1)), Error);
    CHECK_THROWS_AS(positions_at(sol.trajectories, Rational(K + 1)), Error);
}

TEST_CASE("monotone progress along the geodesic") {
    Instance inst = fixture("pinched.json");
    Solution sol = solve(inst);
    for (size_t i = 0; i < sol.trajectories.size(); ++i) {
        const auto& path = sol.paths[i].waypoints;
        // each trajectory waypoint appears on the path no earlier than its
        // predecessor: track (segment, param) pairs
        size_t seg = 0;
        Rational t = 0;
        for (const Point& w : sol.trajectories[i].waypoints) {
            bool found = false;
            for (size_t s = seg; s + 1 < path.size() && !found; ++s) {
                Segment e{path[s], path[s + 1]};
                if (!point_on_segment(w, e)) continue;
                Rational tw = e.degenerate() ? Rational(0)
                                             : param_along(e.a, e.b, w);
                if (s == seg && tw < t) continue;
                seg = s;
                t = tw;
                found = true;
            }
            if (!found) CHECK(w == path.back());
        }
    }
}
