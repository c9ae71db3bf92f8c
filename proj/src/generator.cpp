#include "mutvis/generator.hpp"

#include "mutvis/scheduler.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>

namespace mutvis {

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

/// 2-opt untangling: reverse a sub-tour whenever two edges intersect
/// improperly. Returns false when the point set will not settle.
bool untangle(std::vector<Point>& ring, std::mt19937_64& rng) {
    int m = static_cast<int>(ring.size());
    auto edge_ok = [&](int i, int j) {
        // i < j, edges (i,i+1) and (j,j+1)
        Segment e1{ring[i], ring[(i + 1) % m]};
        Segment e2{ring[j], ring[(j + 1) % m]};
        auto x = segment_intersection(e1, e2);
        bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
        if (adjacent)
            return x.kind == SegmentIntersection::Kind::At;
        return x.kind == SegmentIntersection::Kind::Empty;
    };
    long long budget = static_cast<long long>(m) * m * 20;
    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (int i = 0; i < m && !dirty; ++i) {
            for (int j = i + 1; j < m && !dirty; ++j) {
                if (edge_ok(i, j)) continue;
                bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
                if (adjacent) return false;  // touching, not crossing: resample
                std::reverse(ring.begin() + i + 1, ring.begin() + j + 1);
                dirty = true;
                if (--budget < 0) return false;
            }
        }
    }
    (void)rng;
    return true;
}

Point triangle_point(const Point& a, const Point& b, const Point& c, std::mt19937_64& rng) {
    // strictly interior barycentric coordinates over a 64 grid
    std::uint64_t u = 1 + pick(rng, 61);
    std::uint64_t v = 1 + pick(rng, 62 - u);
    Rational alpha(u, 64), beta(v, 64);
    return Point{a.x + alpha * (b.x - a.x) + beta * (c.x - a.x),
                 a.y + alpha * (b.y - a.y) + beta * (c.y - a.y)};
}

}  // namespace

Instance generate_instance(int vertices, int robots, std::uint64_t seed) {
    if (vertices < 4) throw Error(ErrorCode::GenerationFailed, "need at least 4 vertices");
    if (robots < 1) throw Error(ErrorCode::GenerationFailed, "need at least 1 robot");

    std::mt19937_64 rng(seed);
    constexpr std::uint64_t kCoordRange = 1000001;  // 0..1e6

    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Point> ring;
        std::set<std::pair<long long, long long>> used;
        while (static_cast<int>(ring.size()) < vertices) {
            long long x = static_cast<long long>(pick(rng, kCoordRange));
            long long y = static_cast<long long>(pick(rng, kCoordRange));
            if (used.insert({x, y}).second) ring.push_back(Point{Rational(x), Rational(y)});
        }
        if (!untangle(ring, rng)) continue;

        std::optional<SimplePolygon> maybe_poly;
        try {
            maybe_poly = SimplePolygon::validate(ring);
        } catch (const Error&) {
            continue;
        }
        const SimplePolygon& poly = *maybe_poly;

        Triangulation tri = poly.triangulate();
        // two largest cells, for breathing room
        std::vector<std::pair<Rational, int>> cells;
        for (size_t t = 0; t < tri.triangles.size(); ++t) {
            const auto& v = tri.triangles[t];
            Rational area = cross(poly.vertex(v[0]), poly.vertex(v[1]), poly.vertex(v[2]));
            if (area > 0) cells.push_back({area, static_cast<int>(t)});
        }
        if (cells.size() < 2) continue;
        std::sort(cells.begin(), cells.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });

        auto segment_in_cell = [&](int t) {
            const auto& v = tri.triangles[t];
            Point a = poly.vertex(v[0]), b = poly.vertex(v[1]), c = poly.vertex(v[2]);
            for (int tries = 0; tries < 32; ++tries) {
                Point p = triangle_point(a, b, c, rng);
                Point q = triangle_point(a, b, c, rng);
                if (!(p == q)) return Segment{p, q};
            }
            throw Error(ErrorCode::GenerationFailed, "could not place a segment");
        };
        Segment S = segment_in_cell(cells[0].second);
        Segment T = segment_in_cell(cells[1].second);

        std::set<std::uint64_t> sparams, tparams;
        while (static_cast<int>(sparams.size()) < robots) sparams.insert(pick(rng, 257));
        while (static_cast<int>(tparams.size()) < robots) tparams.insert(pick(rng, 257));
        std::vector<Robot> rs;
        auto sit = sparams.begin();
        auto tit = tparams.begin();
        for (int i = 0; i < robots; ++i, ++sit, ++tit)
            rs.push_back(Robot{lerp(S.a, S.b, Rational(*sit, 256)),
                               lerp(T.a, T.b, Rational(*tit, 256))});

        try {
            Instance inst = make_instance(poly, S, T, std::move(rs));
            if (is_crossing(inst)) continue;  // unreachable by construction
            // Reject placements where the corridor between S and T degenerates
            // (an extreme start interior to the hull of the other extremes):
            // such instances have no hourglass-shaped sweep corridor.
            solve(inst);
            return inst;
        } catch (const Error&) {
            continue;
        }
    }
    throw Error(ErrorCode::GenerationFailed, "no valid instance after bounded retries");
}

}  // namespace mutvis
