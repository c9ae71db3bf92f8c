#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "mutvis/geodesic.hpp"
#include "mutvis/polygon.hpp"

namespace mutvis {

struct Robot {
    Point start;
    Point target;
};

/// A validated SPMV instance. Robots are sorted along S from the endpoint
/// S.a (the designated "top"), so starts[0] = s_1 and starts[n-1] = s_n.
struct Instance {
    SimplePolygon polygon;
    Segment S;
    Segment T;
    std::vector<Point> starts;
    std::vector<Point> targets;

    int robot_count() const { return static_cast<int>(starts.size()); }
};

/// Checks all Instance invariants and sorts robots along S.
/// Throws InvalidInstance (and polygon validation errors).
Instance make_instance(SimplePolygon polygon, Segment S, Segment T, std::vector<Robot> robots);

struct NonCrossing {};
struct Crossing {
    Point q;
};
using Classification = std::variant<NonCrossing, Crossing>;

/// Crossing iff S and T intersect in a single point; collinear overlap is
/// rejected (OverlappingSegments).
Classification classify_instance(const Instance& inst);
bool is_crossing(const Instance& inst);

/// One cell of the corridor between consecutive sweep segments. Degenerate
/// cells collapse to a segment (or a point) of the shared chain.
struct CorridorTriangle {
    Point a;
    Point b;
    Point c;

    bool degenerate() const { return orient(a, b, c) == Orientation::Collinear; }
};

enum class CorridorKind { TwoChains, Pinched };

/// The hourglass of the start span (s_1, s_n) and the target span along T,
/// bounded by two concave geodesic chains U and V.
struct Corridor {
    GeodesicPath U;  // chain from s_1 to one endpoint of the target span
    GeodesicPath V;  // chain from s_n to the other endpoint
    CorridorKind kind = CorridorKind::TwoChains;
    std::optional<Point> pinch;            // first shared vertex along the chains
    std::vector<Point> shared_path;        // whole shared subpath (Pinched only)
    std::vector<CorridorTriangle> triangles;  // ordered from S to T
    std::vector<Segment> sweeps;              // triangles.size() + 1 entries
};

/// Builds the corridor. Requires a non-crossing instance.
Corridor build_corridor(const Instance& inst);

/// As above with a precomputed triangulation of the polygon.
Corridor build_corridor(const Instance& inst, const Triangulation& tri);

/// Ordered sweep segments sigma_0..sigma_K of the corridor.
const std::vector<Segment>& sweep_segments(const Corridor& c);

}  // namespace mutvis
