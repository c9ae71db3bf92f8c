#include "mutvis/crossing.hpp"

#include <algorithm>
#include <cmath>

namespace mutvis {

namespace {

Rational param_on(const Segment& s, const Point& p) { return param_along(s.a, s.b, p); }

bool in_region(const SimplePolygon& region, const GeodesicPath& path) {
    for (const Point& p : path.waypoints)
        if (region.locate(p) == PointLocation::Exterior) return false;
    for (size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
        Point mid{(path.waypoints[i].x + path.waypoints[i + 1].x) / 2,
                  (path.waypoints[i].y + path.waypoints[i + 1].y) / 2};
        if (region.locate(mid) == PointLocation::Exterior) return false;
    }
    return true;
}

bool visible(const SimplePolygon& poly, const Point& a, const Point& b) {
    if (a == b) return poly.locate(a) != PointLocation::Exterior;
    try {
        return poly.segment_inside(Segment{a, b});
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

CrossingDecomposition decompose(const Instance& inst) {
    Classification cls = classify_instance(inst);
    const Crossing* crossing = std::get_if<Crossing>(&cls);
    if (!crossing)
        throw Error(ErrorCode::NotCrossing, "decompose requires crossing S and T");
    const Point& q = crossing->q;

    const Point& s1 = inst.starts.front();
    const Point& sn = inst.starts.back();
    Point t_lo = inst.targets.front();
    Point t_hi = t_lo;
    for (const Point& t : inst.targets) {
        if (param_on(inst.T, t) < param_on(inst.T, t_lo)) t_lo = t;
        if (param_on(inst.T, t) > param_on(inst.T, t_hi)) t_hi = t;
    }
    // Label the regions around q starting from s_1's arm: A1 pairs s_1 with
    // the target arm met first when rotating counterclockwise from s_1's arm.
    Point ds{s1.x - q.x, s1.y - q.y};
    auto vec = [&](const Point& t) { return Point{t.x - q.x, t.y - q.y}; };
    auto half = [&](const Point& v) {
        Rational cr = ds.x * v.y - ds.y * v.x;
        if (cr != 0) return cr > 0 ? 0 : 1;
        return (ds.x * v.x + ds.y * v.y) > 0 ? 0 : 1;
    };
    auto ccw_before = [&](const Point& u, const Point& v) {
        int hu = half(u), hv = half(v);
        if (hu != hv) return hu < hv;
        return (u.x * v.y - u.y * v.x) > 0;
    };
    Point t_adj = ccw_before(vec(t_lo), vec(t_hi)) ? t_lo : t_hi;
    Point t_opp = t_adj == t_lo ? t_hi : t_lo;

    Triangulation tri = inst.polygon.triangulate();
    auto geo = [&](const Point& from, const Point& to) {
        return shortest_path_funnel(inst.polygon, tri, from, to);
    };

    CrossingDecomposition dec{q, {}, {}};
    auto add_region = [&](const Point& start_end, const Point& target_end) {
        GeodesicPath chain = geo(start_end, target_end);
        std::vector<Point> ring{q};
        ring.insert(ring.end(), chain.waypoints.begin(), chain.waypoints.end());
        try {
            dec.regions.push_back(RegionDescriptor{Segment{start_end, q},
                                                   Segment{target_end, q}, chain,
                                                   SimplePolygon::validate(ring)});
        } catch (const Error& e) {
            throw Error(ErrorCode::Internal,
                        std::string("degenerate crossing region: ") + e.what());
        }
    };
    add_region(s1, t_adj);  // A1
    add_region(s1, t_opp);  // A2
    add_region(sn, t_opp);  // A3
    add_region(sn, t_adj);  // A4

    dec.partition.assign(4, {});
    for (int i = 0; i < inst.robot_count(); ++i) {
        GeodesicPath path = geo(inst.starts[i], inst.targets[i]);
        int assigned = -1;
        for (int r = 0; r < 4 && assigned < 0; ++r)
            if (in_region(dec.regions[r].boundary, path)) assigned = r;
        if (assigned < 0)
            throw Error(ErrorCode::Internal, "robot geodesic not contained in any region");
        dec.partition[assigned].push_back(i);
    }
    return dec;
}

Instance hexagon_fixture(const Rational& eps) {
    if (eps <= 0) throw Error(ErrorCode::InvalidEps, "eps must be positive");
    if (eps >= 1) throw Error(ErrorCode::InvalidEps, "eps must be below 1");
    Point v1{-4, 1}, v2{Rational(0), eps}, v3{4, 1};
    Point v4{4, -1}, v5{Rational(0), -eps}, v6{-4, -1};
    SimplePolygon poly = SimplePolygon::validate({v1, v2, v3, v4, v5, v6});
    Segment S{v1, v4}, T{v6, v3};
    std::vector<Robot> robots;
    for (const Rational& t : {Rational(1, 100), Rational(3, 100)})
        robots.push_back(Robot{lerp(S.a, S.b, t), lerp(T.a, T.b, t)});
    for (const Rational& t : {Rational(97, 100), Rational(99, 100)})
        robots.push_back(Robot{lerp(S.a, S.b, t), lerp(T.a, T.b, t)});
    return make_instance(std::move(poly), S, T, std::move(robots));
}

double strip_width(const Rational& fixture_eps) {
    Instance inst = hexagon_fixture(fixture_eps);  // validates eps and geometry
    // Lines parallel to S through the pinch vertices (0, +-eps); width is
    // the cross product of the pinch offset with S's unit direction.
    Point d{inst.S.b.x - inst.S.a.x, inst.S.b.y - inst.S.a.y};
    Rational off_x = 0, off_y = 2 * fixture_eps;
    Rational num = d.x * off_y - d.y * off_x;
    double len = std::sqrt(to_double(d.x * d.x + d.y * d.y));
    return std::abs(to_double(num)) / len;
}

Point critical_points(const GeodesicPath& chain, std::pair<Point, Point> blocking_edge,
                      const GeodesicPath& carrier) {
    bool consecutive = false;
    for (size_t i = 0; i + 1 < chain.waypoints.size(); ++i) {
        if ((chain.waypoints[i] == blocking_edge.first &&
             chain.waypoints[i + 1] == blocking_edge.second) ||
            (chain.waypoints[i] == blocking_edge.second &&
             chain.waypoints[i + 1] == blocking_edge.first))
            consecutive = true;
    }
    if (!consecutive)
        throw Error(ErrorCode::InvalidInstance,
                    "blocking edge is not an edge of the chain");
    for (size_t i = 0; i + 1 < carrier.waypoints.size(); ++i) {
        Segment seg{carrier.waypoints[i], carrier.waypoints[i + 1]};
        auto hit = line_segment_intersection(blocking_edge.first, blocking_edge.second, seg);
        if (hit.kind == SegmentIntersection::Kind::At) return hit.point;
        if (hit.kind == SegmentIntersection::Kind::Overlap) {
            Rational ta = param_along(seg.a, seg.b, hit.overlap.a);
            Rational tb = param_along(seg.a, seg.b, hit.overlap.b);
            return ta <= tb ? hit.overlap.a : hit.overlap.b;
        }
    }
    throw Error(ErrorCode::NoIntersection, "blocking line misses the carrier");
}

namespace {

struct PathPos {
    size_t seg = 0;
    Rational t = 0;

    bool operator<(const PathPos& o) const {
        return seg != o.seg ? seg < o.seg : t < o.t;
    }
};

Point at(const GeodesicPath& p, const PathPos& pos) {
    return lerp(p.waypoints[pos.seg], p.waypoints[pos.seg + 1], pos.t);
}

/// Last intersection of the path with the line through q and q+dir.
std::optional<PathPos> last_line_hit(const GeodesicPath& path, const Point& q,
                                     const Point& dir) {
    Point q2{q.x + dir.x, q.y + dir.y};
    for (size_t i = path.waypoints.size() - 1; i-- > 0;) {
        Segment seg{path.waypoints[i], path.waypoints[i + 1]};
        Rational d1 = cross(q, q2, seg.a);
        Rational d2 = cross(q, q2, seg.b);
        if (d1 == 0 && d2 == 0) return PathPos{i, 1};
        if ((d1 > 0 && d2 > 0) || (d1 < 0 && d2 < 0)) continue;
        return PathPos{i, d1 / (d1 - d2)};
    }
    return std::nullopt;
}

/// Exact binary decomposition of a finite double.
Rational exact_from_double(double v) {
    int exp = 0;
    double m = std::frexp(v, &exp);
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mant);
    boost::multiprecision::cpp_int pow2 = boost::multiprecision::cpp_int(1)
                                          << std::abs(exp);
    if (exp >= 0) return r * Rational(pow2);
    return r / Rational(pow2);
}

}  // namespace

RotatingLineOutcome rotating_line_run(const Instance& inst, int angular_steps) {
    if (angular_steps < 8)
        throw Error(ErrorCode::InvalidInstance, "angular_steps must be at least 8");
    CrossingDecomposition dec = decompose(inst);
    const Point& q = dec.q;

    Triangulation tri = inst.polygon.triangulate();
    int n = inst.robot_count();
    std::vector<GeodesicPath> paths;
    std::vector<bool> on_line(n, false);
    for (int i = 0; i < n; ++i)
        paths.push_back(shortest_path_funnel(inst.polygon, tri, inst.starts[i],
                                             inst.targets[i]));
    for (int i : dec.partition[0]) on_line[i] = true;
    for (int i : dec.partition[2]) on_line[i] = true;

    // Sweep from the direction of the extreme start s_1 to the direction of
    // A1's extreme target, through the A1 sector.
    const Point& s1 = inst.starts.front();
    const Point& t_end = dec.regions[0].arm2.a;
    double th0 = std::atan2(to_double(s1.y - q.y), to_double(s1.x - q.x));
    double th1 = std::atan2(to_double(t_end.y - q.y), to_double(t_end.x - q.x));
    double delta = th1 - th0;
    while (delta > M_PI) delta -= 2 * M_PI;
    while (delta < -M_PI) delta += 2 * M_PI;

    std::vector<PathPos> pos(n);
    constexpr int kSubdivision = 16;

    for (int k = 0; k <= angular_steps; ++k) {
        double theta = th0 + delta * k / angular_steps;
        Point dir{exact_from_double(std::cos(theta)), exact_from_double(std::sin(theta))};

        std::vector<int> placed;
        for (int i = 0; i < n; ++i) {
            if (!on_line[i]) continue;
            auto hit = last_line_hit(paths[i], q, dir);
            if (hit && pos[i] < *hit) pos[i] = *hit;  // never move backwards
            Point p = at(paths[i], pos[i]);
            for (int j : placed) {
                if (!visible(inst.polygon, p, at(paths[j], pos[j])))
                    return RunStuck{theta, {std::min(i, j), std::max(i, j)}};
            }
            placed.push_back(i);
        }
        for (int i = 0; i < n; ++i) {
            if (on_line[i]) continue;
            // furthest forward position along the geodesic visible to all
            // robots placed so far
            std::optional<PathPos> best;
            const auto& w = paths[i].waypoints;
            for (int s = static_cast<int>(w.size()) - 2;
                 s >= static_cast<int>(pos[i].seg) && !best; --s) {
                Rational lo = (s == static_cast<int>(pos[i].seg)) ? pos[i].t : Rational(0);
                for (int j = kSubdivision; j >= 0 && !best; --j) {
                    Rational t = lo + (Rational(1) - lo) * Rational(j, kSubdivision);
                    PathPos cand{static_cast<size_t>(s), t};
                    if (cand < pos[i]) continue;
                    Point p = at(paths[i], cand);
                    bool ok = true;
                    for (int pj : placed)
                        if (!visible(inst.polygon, p, at(paths[pj], pos[pj]))) ok = false;
                    if (ok) best = cand;
                }
            }
            if (!best) {
                // witness: the first placed robot this one cannot see from
                // its current position
                Point p = at(paths[i], pos[i]);
                int other = placed.empty() ? i : placed.front();
                for (int pj : placed)
                    if (!visible(inst.polygon, p, at(paths[pj], pos[pj]))) {
                        other = pj;
                        break;
                    }
                return RunStuck{theta, {std::min(i, other), std::max(i, other)}};
            }
            pos[i] = *best;
            placed.push_back(i);
        }
    }
    return RunCompleted{};
}

}  // namespace mutvis
