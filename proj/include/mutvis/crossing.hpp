#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "mutvis/corridor.hpp"

namespace mutvis {

/// One of the four regions around the crossing point q: two arm segments
/// through q plus a concave geodesic chain between the arm endpoints.
struct RegionDescriptor {
    Segment arm1;        // (extreme start, q)
    Segment arm2;        // (extreme target, q)
    GeodesicPath chain;  // geodesic from arm1's far endpoint to arm2's
    SimplePolygon boundary;
};

struct CrossingDecomposition {
    Point q;
    std::vector<RegionDescriptor> regions;   // A_1..A_4
    std::vector<std::vector<int>> partition; // robot indices R_1..R_4
};

/// Splits a crossing instance into the four regions around q and assigns
/// every robot to the lowest-index region containing its whole geodesic.
/// Throws NotCrossing.
CrossingDecomposition decompose(const Instance& inst);

/// Hexagon family pinched at (0, +-eps); S and T cross in the middle, and
/// every start/target sightline has to thread the pinch.
Instance hexagon_fixture(const Rational& eps);

/// Width of the visibility strip of the hexagon fixture: the distance
/// between the two lines parallel to S through the pinch vertices.
/// Throws InvalidEps.
double strip_width(const Rational& fixture_eps);

/// First intersection (along the carrier from its start) of the line
/// through blocking_edge with the carrier polyline. blocking_edge endpoints
/// must be consecutive vertices of chain. Throws NoIntersection.
Point critical_points(const GeodesicPath& chain, std::pair<Point, Point> blocking_edge,
                      const GeodesicPath& carrier);

struct RunCompleted {};
struct RunStuck {
    double angle;  // radians of the failing line direction
    std::pair<int, int> witness;
};
using RotatingLineOutcome = std::variant<RunCompleted, RunStuck>;

/// Rotating-line strategy demo: sweeps a line through q from S's direction
/// to T's direction in angular_steps increments, pins the R1/R3 robots to
/// the line, advances the R2/R4 robots greedily along their geodesics, and
/// reports the first configuration where some robot has no position that
/// keeps all pairs mutually visible. Throws NotCrossing.
RotatingLineOutcome rotating_line_run(const Instance& inst, int angular_steps);

}  // namespace mutvis
