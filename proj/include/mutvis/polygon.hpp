#pragma once

#include <array>
#include <vector>

#include "mutvis/geometry.hpp"

namespace mutvis {

enum class PointLocation { Interior, Boundary, Exterior };

/// Triangulation of a simple polygon by vertex indices.
/// adjacency[t][e] is the triangle sharing edge
/// (triangles[t][e], triangles[t][(e+1)%3]), or -1 on the boundary.
struct Triangulation {
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 3>> adjacency;
};

/// Counterclockwise simple polygon. Construct through validate().
class SimplePolygon {
public:
    /// Validates simplicity, fixes clockwise input, rejects self-intersection.
    /// Throws TooFewVertices, ZeroArea, NotSimple.
    static SimplePolygon validate(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return verts_; }
    int size() const { return static_cast<int>(verts_.size()); }
    const Point& vertex(int i) const { return verts_[i]; }

    /// Twice the (positive) signed area.
    Rational doubled_area() const;

    /// True at vertex i iff the interior angle exceeds pi.
    bool is_reflex(int i) const;

    PointLocation locate(const Point& p) const;

    /// True iff the closed segment lies entirely in the closed polygon.
    /// Throws EndpointOutside when an endpoint is strictly outside.
    bool segment_inside(const Segment& s) const;

    /// Ear-clipping triangulation; exactly size()-2 triangles, each CCW
    /// with non-negative area (zero area only from collinear input runs).
    Triangulation triangulate() const;

private:
    SimplePolygon() = default;
    std::vector<Point> verts_;
};

}  // namespace mutvis
