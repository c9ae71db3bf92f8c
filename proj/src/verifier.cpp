#include "mutvis/verifier.hpp"

namespace mutvis {

std::vector<bool> verify_paths(const Instance& inst,
                               const std::vector<Trajectory>& trajectories) {
    if (static_cast<int>(trajectories.size()) != inst.robot_count())
        throw Error(ErrorCode::CountMismatch, "trajectory count != robot count");
    VisibilityGraph vg(inst.polygon);
    std::vector<bool> ok;
    ok.reserve(trajectories.size());
    for (int i = 0; i < inst.robot_count(); ++i) {
        const auto& traj = trajectories[i];
        if (traj.waypoints.empty()) {
            ok.push_back(false);
            continue;
        }
        GeodesicPath walked = canonicalize(GeodesicPath{traj.waypoints});
        GeodesicPath expect = vg.shortest_path(inst.starts[i], inst.targets[i]);
        ok.push_back(walked == expect);
    }
    return ok;
}

VerificationReport verify_visibility(const Instance& inst,
                                     const std::vector<Trajectory>& trajectories,
                                     int samples_per_step) {
    if (samples_per_step < 1)
        throw Error(ErrorCode::InvalidInstance, "samples_per_step must be >= 1");
    if (static_cast<int>(trajectories.size()) != inst.robot_count())
        throw Error(ErrorCode::CountMismatch, "trajectory count != robot count");

    VerificationReport rep;
    rep.samples_per_step = samples_per_step;
    rep.paths_ok.assign(trajectories.size(), true);

    size_t K = trajectories.front().waypoints.size() - 1;
    for (const auto& t : trajectories)
        if (t.waypoints.size() != K + 1)
            throw Error(ErrorCode::CountMismatch, "trajectories differ in length");

    int n = inst.robot_count();
    auto check_time = [&](const Rational& time, const std::vector<Point>& pos) -> bool {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                bool visible;
                if (pos[i] == pos[j]) {
                    visible = inst.polygon.locate(pos[i]) != PointLocation::Exterior;
                } else {
                    try {
                        visible = inst.polygon.segment_inside(Segment{pos[i], pos[j]});
                    } catch (const Error&) {
                        visible = false;  // an endpoint left the polygon
                    }
                }
                if (!visible) {
                    rep.visibility_ok = false;
                    rep.first_violation =
                        VisibilityViolation{time, i, j, Segment{pos[i], pos[j]}};
                    return false;
                }
            }
        }
        return true;
    };

    for (size_t k = 0; k < std::max<size_t>(K, 1); ++k) {
        int j0 = (k == 0) ? 0 : 1;  // time k was already checked as step k-1's end
        for (int s = j0; s <= samples_per_step; ++s) {
            Rational time = Rational(k) + Rational(s, samples_per_step);
            if (K == 0) time = 0;
            std::vector<Point> pos = positions_at(trajectories, time);
            if (!check_time(time, pos)) return rep;
            if (K == 0) return rep;
        }
    }
    return rep;
}

VerificationReport verify(const Instance& inst, const std::vector<Trajectory>& trajectories,
                          int samples_per_step) {
    VerificationReport rep = verify_visibility(inst, trajectories, samples_per_step);
    rep.paths_ok = verify_paths(inst, trajectories);
    return rep;
}

}  // namespace mutvis
