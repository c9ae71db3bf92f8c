#pragma once

#include <vector>

#include "mutvis/corridor.hpp"

namespace mutvis {

/// Step classification by the degeneracy of the sweep pair (sigma_k,
/// sigma_{k+1}): A = point to point, B = point to segment, C = segment to
/// point, D = segment to segment. Init tags the forced start positions.
enum class CaseTag { Init, A, B, C, D };

const char* case_tag_name(CaseTag t);

struct Schedule {
    std::vector<Segment> sweeps;     // sigma_0 .. sigma_K
    std::vector<CaseTag> case_tags;  // K entries, case_tags[0] == Init
};

struct Trajectory {
    int robot_index = 0;
    std::vector<Point> waypoints;  // K + 1 entries, one per sweep
};

struct Solution {
    Schedule schedule;
    Corridor corridor;
    std::vector<GeodesicPath> paths;
    std::vector<Trajectory> trajectories;
};

/// Intersection point of the geodesic with the sweep that lies furthest
/// along the path. Throws NoIntersection when they are disjoint.
Point waypoint(const GeodesicPath& path, const Segment& sweep);

/// Full pipeline: geodesics, corridor, per-sweep waypoints.
/// Throws CrossingInstance when S and T cross.
Solution solve(const Instance& inst);
Solution solve(const Instance& inst, const Triangulation& tri);

/// Piecewise-linear positions at rational time in [0, K]; unit time per step.
std::vector<Point> positions_at(const std::vector<Trajectory>& trajectories,
                                const Rational& time);

}  // namespace mutvis
