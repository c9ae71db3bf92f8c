#include "mutvis/polygon.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace mutvis {

namespace {

Rational shoelace2(const std::vector<Point>& v) {
    Rational s = 0;
    int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

}  // namespace

SimplePolygon SimplePolygon::validate(std::vector<Point> vertices) {
    int n = static_cast<int>(vertices.size());
    if (n < 3) throw Error(ErrorCode::TooFewVertices, "polygon needs at least 3 vertices");
    for (int i = 0; i < n; ++i) {
        if (vertices[i] == vertices[(i + 1) % n])
            throw Error(ErrorCode::NotSimple, "repeated consecutive vertex");
    }
    Rational area2 = shoelace2(vertices);
    if (area2 == 0) throw Error(ErrorCode::ZeroArea, "polygon has zero area");
    if (area2 < 0) std::reverse(vertices.begin(), vertices.end());

    // Pairwise edge check: adjacent edges may only share their endpoint.
    for (int i = 0; i < n; ++i) {
        Segment ei{vertices[i], vertices[(i + 1) % n]};
        for (int j = i + 1; j < n; ++j) {
            Segment ej{vertices[j], vertices[(j + 1) % n]};
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            auto isect = segment_intersection(ei, ej);
            if (adjacent) {
                Point shared = (j == i + 1) ? vertices[j] : vertices[0];
                if (isect.kind != SegmentIntersection::Kind::At || !(isect.point == shared))
                    throw Error(ErrorCode::NotSimple,
                                "adjacent edges " + std::to_string(i) + "," + std::to_string(j) +
                                    " overlap");
            } else if (isect.kind != SegmentIntersection::Kind::Empty) {
                throw Error(ErrorCode::NotSimple,
                            "edges " + std::to_string(i) + " and " + std::to_string(j) +
                                " intersect");
            }
        }
    }

    SimplePolygon p;
    p.verts_ = std::move(vertices);
    return p;
}

Rational SimplePolygon::doubled_area() const { return shoelace2(verts_); }

bool SimplePolygon::is_reflex(int i) const {
    int n = size();
    const Point& a = verts_[(i + n - 1) % n];
    const Point& b = verts_[i];
    const Point& c = verts_[(i + 1) % n];
    return orient(a, b, c) == Orientation::CW;
}

PointLocation SimplePolygon::locate(const Point& p) const {
    int n = size();
    for (int i = 0; i < n; ++i) {
        if (point_on_segment(p, Segment{verts_[i], verts_[(i + 1) % n]}))
            return PointLocation::Boundary;
    }
    // Crossing number against a rightward ray, half-open in y.
    int crossings = 0;
    for (int i = 0; i < n; ++i) {
        const Point& a = verts_[i];
        const Point& b = verts_[(i + 1) % n];
        bool a_above = a.y > p.y;
        bool b_above = b.y > p.y;
        if (a_above == b_above) continue;
        // x of the edge at height p.y; the edge is not horizontal here.
        Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (x > p.x) ++crossings;
    }
    return (crossings % 2 == 1) ? PointLocation::Interior : PointLocation::Exterior;
}

bool SimplePolygon::segment_inside(const Segment& s) const {
    if (locate(s.a) == PointLocation::Exterior || locate(s.b) == PointLocation::Exterior)
        throw Error(ErrorCode::EndpointOutside, "segment endpoint outside polygon");
    if (s.degenerate()) return true;

    int n = size();
    std::vector<Rational> params{Rational(0), Rational(1)};
    for (int i = 0; i < n; ++i) {
        Segment edge{verts_[i], verts_[(i + 1) % n]};
        auto isect = segment_intersection(s, edge);
        switch (isect.kind) {
        case SegmentIntersection::Kind::Empty:
            break;
        case SegmentIntersection::Kind::At:
            params.push_back(param_along(s.a, s.b, isect.point));
            break;
        case SegmentIntersection::Kind::Overlap:
            params.push_back(param_along(s.a, s.b, isect.overlap.a));
            params.push_back(param_along(s.a, s.b, isect.overlap.b));
            break;
        }
    }
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    for (size_t i = 0; i + 1 < params.size(); ++i) {
        Point mid = lerp(s.a, s.b, (params[i] + params[i + 1]) / 2);
        if (locate(mid) == PointLocation::Exterior) return false;
    }
    return true;
}

Triangulation SimplePolygon::triangulate() const {
    int n = size();
    std::vector<int> next(n), prev(n);
    for (int i = 0; i < n; ++i) {
        next[i] = (i + 1) % n;
        prev[i] = (i + n - 1) % n;
    }

    auto is_ear = [&](int i, int remaining) {
        int p = prev[i], q = next[i];
        Orientation o = orient(verts_[p], verts_[i], verts_[q]);
        if (o == Orientation::CW) return false;
        if (o == Orientation::Collinear) {
            // A straight vertex clips to a zero-area triangle; a spike
            // cannot occur in a simple polygon.
            return point_on_segment(verts_[i], Segment{verts_[p], verts_[q]});
        }
        // No other remaining vertex may lie in the closed triangle.
        for (int v = next[q]; v != p; v = next[v]) {
            const Point& c = verts_[v];
            if (cross(verts_[p], verts_[i], c) >= 0 && cross(verts_[i], verts_[q], c) >= 0 &&
                cross(verts_[q], verts_[p], c) >= 0)
                return false;
        }
        (void)remaining;
        return true;
    };

    Triangulation t;
    int remaining = n;
    int cur = 0;
    int guard = 0;
    while (remaining > 3) {
        if (++guard > n * n + n)
            throw Error(ErrorCode::Internal, "ear clipping failed to converge");
        if (is_ear(cur, remaining)) {
            t.triangles.push_back({prev[cur], cur, next[cur]});
            next[prev[cur]] = next[cur];
            prev[next[cur]] = prev[cur];
            cur = next[cur];
            --remaining;
            guard = 0;
        } else {
            cur = next[cur];
        }
    }
    t.triangles.push_back({prev[cur], cur, next[cur]});

    // Adjacency across shared (diagonal) edges.
    t.adjacency.assign(t.triangles.size(), {-1, -1, -1});
    std::map<std::pair<int, int>, std::pair<int, int>> edge_owner;
    for (size_t ti = 0; ti < t.triangles.size(); ++ti) {
        for (int e = 0; e < 3; ++e) {
            int a = t.triangles[ti][e];
            int b = t.triangles[ti][(e + 1) % 3];
            auto key = std::minmax(a, b);
            auto it = edge_owner.find(key);
            if (it == edge_owner.end()) {
                edge_owner[key] = {static_cast<int>(ti), e};
            } else {
                t.adjacency[ti][e] = it->second.first;
                t.adjacency[it->second.first][it->second.second] = static_cast<int>(ti);
            }
        }
    }
    return t;
}

}  // namespace mutvis
