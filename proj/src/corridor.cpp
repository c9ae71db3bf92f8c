#include "mutvis/corridor.hpp"

#include <algorithm>
#include <map>

namespace mutvis {

namespace {

struct PointLess {
    bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

Rational param_on(const Segment& s, const Point& p) { return param_along(s.a, s.b, p); }

}  // namespace

Instance make_instance(SimplePolygon polygon, Segment S, Segment T, std::vector<Robot> robots) {
    if (S.degenerate() || T.degenerate())
        throw Error(ErrorCode::InvalidInstance, "S and T must be non-degenerate segments");
    if (robots.empty()) throw Error(ErrorCode::InvalidInstance, "need at least one robot");
    if (!polygon.segment_inside(S))
        throw Error(ErrorCode::InvalidInstance, "S is not inside the polygon");
    if (!polygon.segment_inside(T))
        throw Error(ErrorCode::InvalidInstance, "T is not inside the polygon");
    for (const Robot& r : robots) {
        if (!point_on_segment(r.start, S))
            throw Error(ErrorCode::InvalidInstance, "robot start not on S");
        if (!point_on_segment(r.target, T))
            throw Error(ErrorCode::InvalidInstance, "robot target not on T");
    }
    std::stable_sort(robots.begin(), robots.end(), [&](const Robot& x, const Robot& y) {
        return param_on(S, x.start) < param_on(S, y.start);
    });
    Instance inst{std::move(polygon), S, T, {}, {}};
    for (const Robot& r : robots) {
        inst.starts.push_back(r.start);
        inst.targets.push_back(r.target);
    }
    return inst;
}

Classification classify_instance(const Instance& inst) {
    auto isect = segment_intersection(inst.S, inst.T);
    switch (isect.kind) {
    case SegmentIntersection::Kind::Empty:
        return NonCrossing{};
    case SegmentIntersection::Kind::At:
        return Crossing{isect.point};
    case SegmentIntersection::Kind::Overlap:
        throw Error(ErrorCode::OverlappingSegments, "S and T overlap along a segment");
    }
    throw Error(ErrorCode::Internal, "unreachable");
}

bool is_crossing(const Instance& inst) {
    return std::holds_alternative<Crossing>(classify_instance(inst));
}

namespace {

struct SleevePiece {
    std::vector<CorridorTriangle> triangles;
    std::vector<Segment> sweeps;  // triangles.size() + 1 entries
};

// Triangulates a funnel or hourglass ring and walks the (path-shaped) dual
// from the start edge to the end edge or apex, collecting the crossed
// diagonals as sweep segments.
SleevePiece sleeve_walk(const std::vector<Point>& ring, const Segment& start_edge,
                        const Segment& end_edge) {
    SimplePolygon poly = SimplePolygon::validate(ring);
    Triangulation tri = poly.triangulate();

    std::map<Point, int, PointLess> index;
    for (int i = 0; i < poly.size(); ++i) index[poly.vertex(i)] = i;
    auto idx = [&](const Point& p) {
        auto it = index.find(p);
        if (it == index.end()) throw Error(ErrorCode::Internal, "sleeve point not on ring");
        return it->second;
    };

    auto find_boundary_triangle = [&](int a, int b) {
        for (size_t t = 0; t < tri.triangles.size(); ++t) {
            for (int e = 0; e < 3; ++e) {
                int x = tri.triangles[t][e];
                int y = tri.triangles[t][(e + 1) % 3];
                if (((x == a && y == b) || (x == b && y == a)) && tri.adjacency[t][e] < 0)
                    return static_cast<int>(t);
            }
        }
        throw Error(ErrorCode::Internal, "sleeve boundary edge not found in triangulation");
    };
    auto find_apex_triangle = [&](int a) {
        int found = -1;
        for (size_t t = 0; t < tri.triangles.size(); ++t) {
            for (int e = 0; e < 3; ++e) {
                if (tri.triangles[t][e] == a) {
                    if (found >= 0 && found != static_cast<int>(t))
                        throw Error(ErrorCode::Internal, "sleeve apex has a diagonal");
                    found = static_cast<int>(t);
                }
            }
        }
        if (found < 0) throw Error(ErrorCode::Internal, "sleeve apex not found");
        return found;
    };

    int start_tri = find_boundary_triangle(idx(start_edge.a), idx(start_edge.b));
    int end_tri = end_edge.degenerate() ? find_apex_triangle(idx(end_edge.a))
                                        : find_boundary_triangle(idx(end_edge.a), idx(end_edge.b));

    // Dual walk; the dual of a corridor triangulation is a path.
    std::vector<int> parent(tri.triangles.size(), -2);
    std::vector<int> stack{start_tri};
    parent[start_tri] = -1;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int e = 0; e < 3; ++e) {
            int nb = tri.adjacency[cur][e];
            if (nb >= 0 && parent[nb] == -2) {
                parent[nb] = cur;
                stack.push_back(nb);
            }
        }
    }
    std::vector<int> path;
    for (int cur = end_tri; cur != -1; cur = parent[cur]) {
        if (cur == -2) throw Error(ErrorCode::Internal, "sleeve dual disconnected");
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    if (path.size() != tri.triangles.size())
        throw Error(ErrorCode::Internal, "sleeve dual is not a path over all triangles");

    SleevePiece piece;
    piece.sweeps.push_back(start_edge);
    for (size_t i = 0; i < path.size(); ++i) {
        const auto& v = tri.triangles[path[i]];
        piece.triangles.push_back(
            CorridorTriangle{poly.vertex(v[0]), poly.vertex(v[1]), poly.vertex(v[2])});
        if (i + 1 < path.size()) {
            int e = -1;
            for (int k = 0; k < 3; ++k)
                if (tri.adjacency[path[i]][k] == path[i + 1]) e = k;
            if (e < 0) throw Error(ErrorCode::Internal, "sleeve dual edge missing");
            piece.sweeps.push_back(
                Segment{poly.vertex(v[e]), poly.vertex(v[(e + 1) % 3])});
        }
    }
    piece.sweeps.push_back(end_edge);
    return piece;
}

// Zero-area funnel: the chains are straight, everything is collinear.
SleevePiece degenerate_piece(const Segment& start_edge, const Segment& end_edge) {
    SleevePiece piece;
    piece.sweeps = {start_edge, end_edge};
    Point far = end_edge.degenerate() ? end_edge.a : end_edge.b;
    piece.triangles = {CorridorTriangle{start_edge.a, start_edge.b, far}};
    return piece;
}

void append_piece(Corridor& c, const SleevePiece& piece) {
    size_t start = 0;
    if (!c.sweeps.empty()) {
        // The junction sweep is shared with the previous piece.
        start = 1;
    } else {
        c.sweeps.push_back(piece.sweeps.front());
    }
    for (size_t i = 0; i < piece.triangles.size(); ++i) {
        c.triangles.push_back(piece.triangles[i]);
        c.sweeps.push_back(piece.sweeps[i + 1]);
    }
    (void)start;
}

// Shared subpath of two chains: the run of common vertices, contiguous and
// identically ordered in both (the chains merge at a reflex vertex and
// split again at most once).
std::vector<Point> shared_run(const GeodesicPath& U, const GeodesicPath& V) {
    std::map<Point, int, PointLess> vpos;
    for (size_t j = 0; j < V.waypoints.size(); ++j) vpos[V.waypoints[j]] = static_cast<int>(j);
    int i0 = -1, j0 = -1;
    for (size_t i = 0; i < U.waypoints.size(); ++i) {
        auto it = vpos.find(U.waypoints[i]);
        if (it != vpos.end()) {
            i0 = static_cast<int>(i);
            j0 = it->second;
            break;
        }
    }
    if (i0 < 0) return {};
    std::vector<Point> run;
    size_t i = i0, j = j0;
    while (i < U.waypoints.size() && j < V.waypoints.size() &&
           U.waypoints[i] == V.waypoints[j]) {
        run.push_back(U.waypoints[i]);
        ++i;
        ++j;
    }
    // Sanity: no further shared vertices after the run.
    for (; i < U.waypoints.size(); ++i) {
        if (vpos.count(U.waypoints[i]))
            throw Error(ErrorCode::Internal, "chains share vertices outside a contiguous run");
    }
    return run;
}

GeodesicPath subpath(const GeodesicPath& p, size_t from, size_t to) {
    GeodesicPath r;
    r.waypoints.assign(p.waypoints.begin() + from, p.waypoints.begin() + to + 1);
    return r;
}

size_t index_of(const GeodesicPath& p, const Point& q) {
    for (size_t i = 0; i < p.waypoints.size(); ++i)
        if (p.waypoints[i] == q) return i;
    throw Error(ErrorCode::Internal, "waypoint not found on chain");
}

// Ring for a funnel between a segment edge (a0 -> b0) and an apex, walking
// chainA from a0 to apex and chainB from b0 to apex.
std::vector<Point> funnel_ring(const GeodesicPath& chainA, const GeodesicPath& chainB) {
    std::vector<Point> ring(chainA.waypoints.begin(), chainA.waypoints.end());
    for (size_t j = chainB.waypoints.size() - 1; j-- > 0;) ring.push_back(chainB.waypoints[j]);
    return ring;
}

bool path_inside(const SimplePolygon& poly, const GeodesicPath& path) {
    try {
        for (size_t i = 0; i + 1 < path.waypoints.size(); ++i)
            if (!poly.segment_inside(Segment{path.waypoints[i], path.waypoints[i + 1]}))
                return false;
    } catch (const Error&) {
        return false;
    }
    return true;
}

bool all_collinear(const std::vector<Point>& pts) {
    for (size_t i = 2; i < pts.size(); ++i)
        if (orient(pts[0], pts[1], pts[i]) != Orientation::Collinear) {
            // anchor pair may itself be degenerate; find a spanning pair first
            goto full_check;
        }
    return true;
full_check:
    // Find two distinct points, then test the rest against them.
    size_t b = 1;
    while (b < pts.size() && pts[b] == pts[0]) ++b;
    if (b == pts.size()) return true;
    for (size_t i = 0; i < pts.size(); ++i)
        if (orient(pts[0], pts[b], pts[i]) != Orientation::Collinear) return false;
    return true;
}

SleevePiece funnel_piece(const GeodesicPath& chainA, const GeodesicPath& chainB,
                         const Segment& start_edge, const Point& apex) {
    Segment apex_seg{apex, apex};
    if (start_edge.degenerate()) return SleevePiece{{}, {Segment{apex, apex}}};
    std::vector<Point> ring = funnel_ring(chainA, chainB);
    if (all_collinear(ring)) return degenerate_piece(start_edge, apex_seg);
    return sleeve_walk(ring, start_edge, apex_seg);
}

}  // namespace

Corridor build_corridor(const Instance& inst) {
    Triangulation tri = inst.polygon.triangulate();
    return build_corridor(inst, tri);
}

Corridor build_corridor(const Instance& inst, const Triangulation& tri) {
    if (is_crossing(inst))
        throw Error(ErrorCode::CrossingInstance, "corridor requires a non-crossing instance");

    const Point& s1 = inst.starts.front();
    const Point& sn = inst.starts.back();

    // Target span along T.
    Rational lo = param_on(inst.T, inst.targets.front());
    Rational hi = lo;
    for (const Point& t : inst.targets) {
        Rational p = param_on(inst.T, t);
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    Point tlo = lerp(inst.T.a, inst.T.b, lo);
    Point thi = lerp(inst.T.a, inst.T.b, hi);

    Segment s_eff{s1, sn};
    Segment t_eff{tlo, thi};

    auto geo = [&](const Point& from, const Point& to) {
        return shortest_path_funnel(inst.polygon, tri, from, to);
    };

    Corridor c;

    // Choose the endpoint pairing whose chains do not cross. When the
    // chains merge (pinched hourglass) either pairing gives the same funnels.
    for (int pairing = 0; pairing < 2; ++pairing) {
        const Point& eU = (pairing == 0) ? tlo : thi;
        const Point& eV = (pairing == 0) ? thi : tlo;
        GeodesicPath U = geo(s1, eU);
        GeodesicPath V = geo(sn, eV);

        std::vector<Point> run = shared_run(U, V);
        if (s_eff.degenerate() || t_eff.degenerate()) {
            if (run.empty())
                throw Error(ErrorCode::Internal, "degenerate span without a shared chain vertex");
        }
        if (!run.empty()) {
            // Pinched: S-funnel, shared path, T-funnel.
            const Point& p1 = run.front();
            const Point& p2 = run.back();
            c.U = U;
            c.V = V;
            c.kind = CorridorKind::Pinched;
            c.pinch = p1;
            c.shared_path = run;

            size_t ui = index_of(U, p1), vi = index_of(V, p1);
            size_t uj = index_of(U, p2), vj = index_of(V, p2);

            append_piece(c, funnel_piece(subpath(U, 0, ui), subpath(V, 0, vi), s_eff, p1));
            for (size_t k = 0; k + 1 < run.size(); ++k) {
                c.triangles.push_back(CorridorTriangle{run[k], run[k + 1], run[k + 1]});
                c.sweeps.push_back(Segment{run[k + 1], run[k + 1]});
            }
            // T-funnel runs from the apex p2 outward; build it reversed
            // (T-span to apex) and flip.
            if (!t_eff.degenerate()) {
                GeodesicPath uBack = subpath(U, uj, U.waypoints.size() - 1).reversed();
                GeodesicPath vBack = subpath(V, vj, V.waypoints.size() - 1).reversed();
                SleevePiece piece = funnel_piece(uBack, vBack, Segment{eU, eV}, p2);
                std::reverse(piece.triangles.begin(), piece.triangles.end());
                std::reverse(piece.sweeps.begin(), piece.sweeps.end());
                append_piece(c, piece);
            }
            return c;
        }

        // No shared vertex: try to close the hourglass ring.
        std::vector<Point> ring(U.waypoints.begin(), U.waypoints.end());
        for (size_t j = V.waypoints.size(); j-- > 0;) ring.push_back(V.waypoints[j]);
        if (all_collinear(ring)) {
            // Fully flat corridor: a segment with a gap between the spans.
            c.U = U;
            c.V = V;
            c.kind = CorridorKind::TwoChains;
            Point near_s = sn, near_t = eV;
            // Orient: the S-span endpoint closest to T and vice versa.
            if (squared_distance(s1, eU) + squared_distance(s1, eV) <
                squared_distance(sn, eU) + squared_distance(sn, eV))
                near_s = s1;
            if (squared_distance(tlo, s1) + squared_distance(tlo, sn) <
                squared_distance(thi, s1) + squared_distance(thi, sn))
                near_t = tlo;
            else
                near_t = thi;
            c.sweeps.push_back(s_eff);
            if (!(s_eff.degenerate() && s_eff.a == near_s)) {
                c.triangles.push_back(CorridorTriangle{s_eff.a, s_eff.b, near_s});
                c.sweeps.push_back(Segment{near_s, near_s});
            }
            c.triangles.push_back(CorridorTriangle{near_s, near_t, near_t});
            c.sweeps.push_back(Segment{near_t, near_t});
            if (!(t_eff.degenerate() && t_eff.a == near_t)) {
                c.triangles.push_back(CorridorTriangle{near_t, t_eff.a, t_eff.b});
                c.sweeps.push_back(t_eff);
            }
            return c;
        }
        try {
            // The wrong pairing can still close into a simple ring when the
            // chains are straight; the true hourglass is the one containing
            // the crossed extreme geodesics as well.
            SimplePolygon ring_poly = SimplePolygon::validate(ring);
            if (!path_inside(ring_poly, geo(s1, eV)) || !path_inside(ring_poly, geo(sn, eU))) {
                if (pairing == 1)
                    throw Error(ErrorCode::Internal, "no pairing yields a closed hourglass");
                continue;
            }
            SleevePiece piece = sleeve_walk(ring, s_eff, Segment{eU, eV});
            c.U = U;
            c.V = V;
            c.kind = CorridorKind::TwoChains;
            append_piece(c, piece);
            return c;
        } catch (const Error&) {
            if (pairing == 1) throw;
            // wrong pairing: chains cross; try the other one
        }
    }
    throw Error(ErrorCode::Internal, "corridor construction failed for both pairings");
}

const std::vector<Segment>& sweep_segments(const Corridor& c) { return c.sweeps; }

}  // namespace mutvis
