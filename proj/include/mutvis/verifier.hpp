#pragma once

#include <optional>
#include <vector>

#include "mutvis/scheduler.hpp"

namespace mutvis {

struct VisibilityViolation {
    Rational time;
    int i = 0;
    int j = 0;
    Segment witness;
};

struct VerificationReport {
    std::vector<bool> paths_ok;  // per robot
    bool visibility_ok = true;
    std::optional<VisibilityViolation> first_violation;
    int samples_per_step = 0;

    bool ok() const {
        if (!visibility_ok) return false;
        for (bool b : paths_ok)
            if (!b) return false;
        return true;
    }
};

/// Per-robot check that the trajectory, after dropping zero-length moves and
/// merging collinear runs, equals the geodesic computed by an independent
/// visibility-graph shortest path.
std::vector<bool> verify_paths(const Instance& inst,
                               const std::vector<Trajectory>& trajectories);

/// Samples every step at rational times k + j/samples and checks each robot
/// pair with the exact segment-in-polygon test. Reports the lexicographically
/// first (time, i, j) violation.
VerificationReport verify_visibility(const Instance& inst,
                                     const std::vector<Trajectory>& trajectories,
                                     int samples_per_step);

VerificationReport verify(const Instance& inst, const std::vector<Trajectory>& trajectories,
                          int samples_per_step);

}  // namespace mutvis
