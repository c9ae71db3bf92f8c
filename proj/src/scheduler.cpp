#include "mutvis/scheduler.hpp"

namespace mutvis {

const char* case_tag_name(CaseTag t) {
    switch (t) {
    case CaseTag::Init: return "Init";
    case CaseTag::A: return "A";
    case CaseTag::B: return "B";
    case CaseTag::C: return "C";
    case CaseTag::D: return "D";
    }
    return "?";
}

Point waypoint(const GeodesicPath& path, const Segment& sweep) {
    const auto& w = path.waypoints;
    if (w.empty()) throw Error(ErrorCode::DegenerateInput, "empty path");
    if (w.size() == 1) {
        if (point_on_segment(w[0], sweep)) return w[0];
        throw Error(ErrorCode::NoIntersection, "sweep does not meet the path");
    }
    for (size_t i = w.size() - 1; i-- > 0;) {
        Segment seg{w[i], w[i + 1]};
        if (sweep.degenerate()) {
            if (point_on_segment(sweep.a, seg)) return sweep.a;
            continue;
        }
        auto x = segment_intersection(seg, sweep);
        if (x.kind == SegmentIntersection::Kind::At) return x.point;
        if (x.kind == SegmentIntersection::Kind::Overlap) {
            // pick the overlap endpoint further along the path segment
            Rational ta = param_along(seg.a, seg.b, x.overlap.a);
            Rational tb = param_along(seg.a, seg.b, x.overlap.b);
            return ta > tb ? x.overlap.a : x.overlap.b;
        }
    }
    throw Error(ErrorCode::NoIntersection, "sweep does not meet the path");
}

Solution solve(const Instance& inst) {
    Triangulation tri = inst.polygon.triangulate();
    return solve(inst, tri);
}

Solution solve(const Instance& inst, const Triangulation& tri) {
    if (is_crossing(inst))
        throw Error(ErrorCode::CrossingInstance, "S and T cross; no schedule exists");

    Solution sol;
    sol.corridor = build_corridor(inst, tri);
    const auto& sweeps = sol.corridor.sweeps;
    size_t K = sweeps.size() - 1;

    sol.schedule.sweeps = sweeps;
    sol.schedule.case_tags.reserve(K);
    for (size_t k = 0; k < K; ++k) {
        if (k == 0) {
            sol.schedule.case_tags.push_back(CaseTag::Init);
            continue;
        }
        bool d0 = sweeps[k].degenerate();
        bool d1 = sweeps[k + 1].degenerate();
        sol.schedule.case_tags.push_back(d0 ? (d1 ? CaseTag::A : CaseTag::B)
                                            : (d1 ? CaseTag::C : CaseTag::D));
    }

    int n = inst.robot_count();
    for (int i = 0; i < n; ++i)
        sol.paths.push_back(shortest_path_funnel(inst.polygon, tri, inst.starts[i],
                                                 inst.targets[i]));

    for (int i = 0; i < n; ++i) {
        Trajectory traj;
        traj.robot_index = i;
        traj.waypoints.push_back(inst.starts[i]);  // w_{i,0} is forced
        for (size_t k = 1; k <= K; ++k)
            traj.waypoints.push_back(waypoint(sol.paths[i], sweeps[k]));
        if (traj.waypoints.back() != inst.targets[i])
            throw Error(ErrorCode::Internal, "final waypoint is not the target");
        sol.trajectories.push_back(std::move(traj));
    }
    return sol;
}

std::vector<Point> positions_at(const std::vector<Trajectory>& trajectories,
                                const Rational& time) {
    if (trajectories.empty()) return {};
    size_t K = trajectories.front().waypoints.size() - 1;
    if (time < 0 || time > Rational(K))
        throw Error(ErrorCode::TimeOutOfRange, "time outside [0, K]");
    if (K == 0) {
        std::vector<Point> out;
        for (const auto& t : trajectories) out.push_back(t.waypoints.front());
        return out;
    }
    auto k = static_cast<size_t>(boost::multiprecision::numerator(time) /
                                 boost::multiprecision::denominator(time));
    if (k == K) k = K - 1;  // time == K lands on the last step's endpoint
    Rational lambda = time - Rational(k);
    std::vector<Point> out;
    out.reserve(trajectories.size());
    for (const auto& t : trajectories) {
        if (t.waypoints.size() != K + 1)
            throw Error(ErrorCode::CountMismatch, "trajectories differ in length");
        out.push_back(lerp(t.waypoints[k], t.waypoints[k + 1], lambda));
    }
    return out;
}

}  // namespace mutvis
