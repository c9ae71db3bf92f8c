#pragma once

#include <vector>

#include "mutvis/polygon.hpp"

namespace mutvis {

/// Euclidean shortest path inside a simple polygon. Canonical form:
/// consecutive waypoints distinct, no three consecutive waypoints collinear;
/// interior waypoints are reflex vertices of the polygon.
struct GeodesicPath {
    std::vector<Point> waypoints;

    bool operator==(const GeodesicPath&) const = default;

    const Point& source() const { return waypoints.front(); }
    const Point& target() const { return waypoints.back(); }
    GeodesicPath reversed() const;
};

/// Removes zero-length moves, then merges collinear runs.
GeodesicPath canonicalize(GeodesicPath path);

/// Sum of Euclidean waypoint distances (double precision).
double path_length(const GeodesicPath& path);

/// Geodesic via the funnel (sleeve) algorithm over a triangulation of P.
/// Throws PointOutside when s or t is exterior.
GeodesicPath shortest_path_funnel(const SimplePolygon& polygon, const Triangulation& tri,
                                  const Point& s, const Point& t);

/// Independent oracle: Dijkstra over {s, t} + reflex vertices with exact
/// visibility edges and double-precision Euclidean weights. Reflex-reflex
/// visibility is precomputed once so repeated queries stay cheap.
class VisibilityGraph {
public:
    explicit VisibilityGraph(const SimplePolygon& polygon);

    GeodesicPath shortest_path(const Point& s, const Point& t) const;

    /// Set when two distinct predecessors produced near-equal distances;
    /// callers generating test instances should reject such instances.
    bool near_tie_seen() const { return near_tie_; }

private:
    const SimplePolygon* polygon_;
    std::vector<int> reflex_;
    std::vector<std::vector<bool>> visible_;
    mutable bool near_tie_ = false;
};

GeodesicPath shortest_path_vgraph(const SimplePolygon& polygon, const Point& s, const Point& t);

}  // namespace mutvis
