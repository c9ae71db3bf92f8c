#include "mutvis/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>

namespace mutvis {

GeodesicPath GeodesicPath::reversed() const {
    GeodesicPath r = *this;
    std::reverse(r.waypoints.begin(), r.waypoints.end());
    return r;
}

GeodesicPath canonicalize(GeodesicPath path) {
    auto& w = path.waypoints;
    // Drop zero-length moves.
    w.erase(std::unique(w.begin(), w.end()), w.end());
    // Merge collinear runs.
    std::vector<Point> out;
    for (const Point& p : w) {
        while (out.size() >= 2 &&
               orient(out[out.size() - 2], out.back(), p) == Orientation::Collinear) {
            out.pop_back();
        }
        out.push_back(p);
    }
    path.waypoints = std::move(out);
    return path;
}

double path_length(const GeodesicPath& path) {
    double len = 0;
    for (size_t i = 0; i + 1 < path.waypoints.size(); ++i)
        len += distance(path.waypoints[i], path.waypoints[i + 1]);
    return len;
}

namespace {

bool in_closed_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
    Rational d1 = cross(a, b, p);
    Rational d2 = cross(b, c, p);
    Rational d3 = cross(c, a, p);
    bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
    bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
    return !(has_neg && has_pos);
}

// Triangle of the triangulation containing p, preferring positive-area
// triangles (a point on a degenerate sliver also lies in a real neighbor).
int locate_triangle(const SimplePolygon& poly, const Triangulation& tri, const Point& p) {
    int degenerate_hit = -1;
    for (size_t t = 0; t < tri.triangles.size(); ++t) {
        const auto& v = tri.triangles[t];
        const Point& a = poly.vertex(v[0]);
        const Point& b = poly.vertex(v[1]);
        const Point& c = poly.vertex(v[2]);
        if (!in_closed_triangle(a, b, c, p)) continue;
        if (orient(a, b, c) == Orientation::Collinear) {
            if (point_on_segment(p, Segment{a, b}) || point_on_segment(p, Segment{b, c}))
                degenerate_hit = static_cast<int>(t);
            continue;
        }
        return static_cast<int>(t);
    }
    return degenerate_hit;
}

std::vector<int> dual_path(const Triangulation& tri, int from, int to) {
    std::vector<int> parent(tri.triangles.size(), -2);
    std::deque<int> queue{from};
    parent[from] = -1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (cur == to) break;
        for (int e = 0; e < 3; ++e) {
            int nb = tri.adjacency[cur][e];
            if (nb >= 0 && parent[nb] == -2) {
                parent[nb] = cur;
                queue.push_back(nb);
            }
        }
    }
    if (parent[to] == -2) throw Error(ErrorCode::Internal, "triangulation dual is disconnected");
    std::vector<int> path;
    for (int cur = to; cur != -1; cur = parent[cur]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    return path;
}

struct Portal {
    Point left;
    Point right;
};

// Classic funnel over a portal sequence; exact predicates throughout.
std::vector<Point> run_funnel(const Point& s, const Point& t, const std::vector<Portal>& portals) {
    std::vector<Point> path{s};
    Point apex = s, left = s, right = s;
    size_t apex_idx = 0, left_idx = 0, right_idx = 0;

    size_t n = portals.size();
    size_t guard = 0;
    for (size_t i = 0; i <= n; ++i) {
        if (++guard > (n + 2) * (n + 2))
            throw Error(ErrorCode::Internal, "funnel failed to converge");
        Point l = (i < n) ? portals[i].left : t;
        Point r = (i < n) ? portals[i].right : t;

        if (cross(apex, right, r) >= 0) {
            if (apex == right || cross(apex, left, r) <= 0) {
                right = r;
                right_idx = i;
            } else {
                // Right boundary crossed the left one: left point is a corner.
                path.push_back(left);
                apex = left;
                apex_idx = left_idx;
                left = right = apex;
                left_idx = right_idx = apex_idx;
                i = apex_idx;
                continue;
            }
        }
        if (cross(apex, left, l) <= 0) {
            if (apex == left || cross(apex, right, l) >= 0) {
                left = l;
                left_idx = i;
            } else {
                path.push_back(right);
                apex = right;
                apex_idx = right_idx;
                left = right = apex;
                left_idx = right_idx = apex_idx;
                i = apex_idx;
                continue;
            }
        }
    }
    if (!(path.back() == t)) path.push_back(t);
    return path;
}

}  // namespace

GeodesicPath shortest_path_funnel(const SimplePolygon& polygon, const Triangulation& tri,
                                  const Point& s, const Point& t) {
    if (polygon.locate(s) == PointLocation::Exterior)
        throw Error(ErrorCode::PointOutside, "funnel source outside polygon");
    if (polygon.locate(t) == PointLocation::Exterior)
        throw Error(ErrorCode::PointOutside, "funnel target outside polygon");
    if (s == t) return GeodesicPath{{s}};

    int ts = locate_triangle(polygon, tri, s);
    int tt = locate_triangle(polygon, tri, t);
    if (ts < 0 || tt < 0) throw Error(ErrorCode::Internal, "point not located in any triangle");
    if (ts == tt) return GeodesicPath{{s, t}};

    std::vector<int> sleeve = dual_path(tri, ts, tt);
    std::vector<Portal> portals;
    portals.reserve(sleeve.size());
    for (size_t i = 0; i + 1 < sleeve.size(); ++i) {
        int cur = sleeve[i], nxt = sleeve[i + 1];
        int e = -1;
        for (int k = 0; k < 3; ++k)
            if (tri.adjacency[cur][k] == nxt) e = k;
        if (e < 0) throw Error(ErrorCode::Internal, "broken dual path");
        // Directed edge (a,b) in the CCW cycle of `cur`; crossing it outward
        // puts b on the traveler's left.
        const Point& a = polygon.vertex(tri.triangles[cur][e]);
        const Point& b = polygon.vertex(tri.triangles[cur][(e + 1) % 3]);
        portals.push_back(Portal{b, a});
    }
    return canonicalize(GeodesicPath{run_funnel(s, t, portals)});
}

VisibilityGraph::VisibilityGraph(const SimplePolygon& polygon) : polygon_(&polygon) {
    for (int i = 0; i < polygon.size(); ++i)
        if (polygon.is_reflex(i)) reflex_.push_back(i);
    int r = static_cast<int>(reflex_.size());
    visible_.assign(r, std::vector<bool>(r, false));
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            bool vis = polygon.segment_inside(
                Segment{polygon.vertex(reflex_[i]), polygon.vertex(reflex_[j])});
            visible_[i][j] = visible_[j][i] = vis;
        }
    }
}

GeodesicPath VisibilityGraph::shortest_path(const Point& s, const Point& t) const {
    const SimplePolygon& poly = *polygon_;
    if (poly.locate(s) == PointLocation::Exterior)
        throw Error(ErrorCode::PointOutside, "vgraph source outside polygon");
    if (poly.locate(t) == PointLocation::Exterior)
        throw Error(ErrorCode::PointOutside, "vgraph target outside polygon");
    if (s == t) return GeodesicPath{{s}};

    // Nodes: 0 = s, 1 = t, 2.. = reflex vertices.
    int r = static_cast<int>(reflex_.size());
    int n = r + 2;
    std::vector<Point> pts(n);
    pts[0] = s;
    pts[1] = t;
    for (int i = 0; i < r; ++i) pts[i + 2] = poly.vertex(reflex_[i]);

    auto edge_visible = [&](int i, int j) {
        if (i >= 2 && j >= 2) return visible_[i - 2][j - 2];
        if (pts[i] == pts[j]) return true;
        return poly.segment_inside(Segment{pts[i], pts[j]});
    };

    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<int> pred(n, -1);
    std::vector<bool> done(n, false);
    using QE = std::pair<double, int>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
    dist[0] = 0;
    pq.push({0.0, 0});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (done[u]) continue;
        done[u] = true;
        if (u == 1) break;
        for (int v = 0; v < n; ++v) {
            if (v == u || done[v]) continue;
            if (!edge_visible(u, v)) continue;
            double nd = d + distance(pts[u], pts[v]);
            if (nd < dist[v] - 1e-12) {
                dist[v] = nd;
                pred[v] = u;
                pq.push({nd, v});
            } else if (pred[v] != u && pred[v] != -1 &&
                       std::abs(nd - dist[v]) <= 1e-9 * (1.0 + dist[v])) {
                near_tie_ = true;
            }
        }
    }
    if (!done[1]) throw Error(ErrorCode::Internal, "vgraph target unreachable");

    std::vector<Point> waypoints;
    for (int cur = 1; cur != -1; cur = pred[cur]) waypoints.push_back(pts[cur]);
    std::reverse(waypoints.begin(), waypoints.end());
    return canonicalize(GeodesicPath{std::move(waypoints)});
}

GeodesicPath shortest_path_vgraph(const SimplePolygon& polygon, const Point& s, const Point& t) {
    return VisibilityGraph(polygon).shortest_path(s, t);
}

}  // namespace mutvis
