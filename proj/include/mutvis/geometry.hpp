#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "mutvis/error.hpp"

namespace mutvis {

/// Exact rational scalar. Boost keeps the canonical form for us:
/// denominator > 0 and gcd(|num|, den) = 1.
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

/// Parses "p/q", plain integers ("-3") and decimal strings ("1.25").
Rational rational_from_string(const std::string& s);

/// Lossless textual form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& r);

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point&) const = default;
};

/// Lexicographic (x, y) order, for use as a map key.
bool lex_less(const Point& a, const Point& b);

struct Segment {
    Point a;
    Point b;

    bool degenerate() const { return a == b; }
};

enum class Orientation { CCW, CW, Collinear };

/// Sign of the exact cross product (q-p) x (r-p).
Orientation orient(const Point& p, const Point& q, const Point& r);

Rational cross(const Point& o, const Point& a, const Point& b);
Rational dot(const Point& o, const Point& a, const Point& b);
Rational squared_distance(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);

/// a + t*(b-a)
Point lerp(const Point& a, const Point& b, const Rational& t);

/// Parameter t of p along segment (a,b); requires p collinear with a,b and a != b.
Rational param_along(const Point& a, const Point& b, const Point& p);

/// True iff p lies on the closed segment s (exact).
bool point_on_segment(const Point& p, const Segment& s);

struct SegmentIntersection {
    enum class Kind { Empty, At, Overlap };

    Kind kind = Kind::Empty;
    Point point;      // valid when kind == At
    Segment overlap;  // valid when kind == Overlap

    static SegmentIntersection empty() { return {}; }
    static SegmentIntersection at(Point p) {
        SegmentIntersection r;
        r.kind = Kind::At;
        r.point = std::move(p);
        return r;
    }
    static SegmentIntersection along(Segment s) {
        SegmentIntersection r;
        r.kind = Kind::Overlap;
        r.overlap = std::move(s);
        return r;
    }
};

/// Exact closed-segment intersection. Endpoint touches count as At.
/// Throws DegenerateInput if either segment has a == b.
SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);

/// Intersection of the infinite line through (la, lb) with the closed
/// segment s. Requires la != lb.
SegmentIntersection line_segment_intersection(const Point& la, const Point& lb,
                                              const Segment& s);

}  // namespace mutvis
