#include "mutvis/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace mutvis {

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_from_string(const std::string& s) {
    using Int = boost::multiprecision::cpp_int;
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational string");
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator: " + s);
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string head = s.substr(0, dot);
            std::string tail = s.substr(dot + 1);
            if (tail.find_first_not_of("0123456789") != std::string::npos)
                throw Error(ErrorCode::ParseError, "bad decimal: " + s);
            bool neg = !head.empty() && head[0] == '-';
            if (neg || (!head.empty() && head[0] == '+')) head = head.substr(1);
            Int ipart = head.empty() ? Int(0) : Int(head);
            Int den = 1;
            for (size_t i = 0; i < tail.size(); ++i) den *= 10;
            Int num = ipart * den + (tail.empty() ? Int(0) : Int(tail));
            if (neg) num = -num;
            return Rational(num, den);
        }
        return Rational(Int(s));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad rational: " + s);
    }
}

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational dot(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

Orientation orient(const Point& p, const Point& q, const Point& r) {
    Rational c = cross(p, q, r);
    if (c > 0) return Orientation::CCW;
    if (c < 0) return Orientation::CW;
    return Orientation::Collinear;
}

Rational squared_distance(const Point& a, const Point& b) {
    Rational dx = b.x - a.x;
    Rational dy = b.y - a.y;
    return dx * dx + dy * dy;
}

double distance(const Point& a, const Point& b) {
    return std::sqrt(to_double(squared_distance(a, b)));
}

Point lerp(const Point& a, const Point& b, const Rational& t) {
    return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

Rational param_along(const Point& a, const Point& b, const Point& p) {
    if (a == b) throw Error(ErrorCode::DegenerateInput, "param_along: zero-length segment");
    Rational dx = b.x - a.x;
    Rational dy = b.y - a.y;
    // Use the longer axis to avoid dividing by zero on axis-aligned segments.
    if (abs(dx) >= abs(dy)) return (p.x - a.x) / dx;
    return (p.y - a.y) / dy;
}

bool point_on_segment(const Point& p, const Segment& s) {
    if (orient(s.a, s.b, p) != Orientation::Collinear) return false;
    if (s.a == s.b) return p == s.a;
    return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
           std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

namespace {

// Collinear overlap of two segments on the same line; Empty when disjoint,
// At when they touch in a single point.
SegmentIntersection collinear_overlap(const Segment& s1, const Segment& s2) {
    Rational t0 = 0, t1 = 1;
    Rational u0 = param_along(s1.a, s1.b, s2.a);
    Rational u1 = param_along(s1.a, s1.b, s2.b);
    if (u0 > u1) std::swap(u0, u1);
    Rational lo = std::max(t0, u0);
    Rational hi = std::min(t1, u1);
    if (lo > hi) return SegmentIntersection::empty();
    if (lo == hi) return SegmentIntersection::at(lerp(s1.a, s1.b, lo));
    return SegmentIntersection::along(Segment{lerp(s1.a, s1.b, lo), lerp(s1.a, s1.b, hi)});
}

}  // namespace

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
    if (s1.degenerate() || s2.degenerate())
        throw Error(ErrorCode::DegenerateInput, "segment_intersection: degenerate segment");

    Rational d1 = cross(s2.a, s2.b, s1.a);
    Rational d2 = cross(s2.a, s2.b, s1.b);
    Rational d3 = cross(s1.a, s1.b, s2.a);
    Rational d4 = cross(s1.a, s1.b, s2.b);

    if (d1 == 0 && d2 == 0) return collinear_overlap(s1, s2);

    // Proper or touching crossing: signs opposite or zero on both sides.
    bool straddle1 = (d1 <= 0 && d2 >= 0) || (d1 >= 0 && d2 <= 0);
    bool straddle2 = (d3 <= 0 && d4 >= 0) || (d3 >= 0 && d4 <= 0);
    if (!straddle1 || !straddle2) return SegmentIntersection::empty();

    // t along s1 where the supporting lines meet.
    Rational denom = d1 - d2;  // != 0 here
    Rational t = d1 / denom;
    return SegmentIntersection::at(lerp(s1.a, s1.b, t));
}

SegmentIntersection line_segment_intersection(const Point& la, const Point& lb,
                                              const Segment& s) {
    if (la == lb) throw Error(ErrorCode::DegenerateInput, "line_segment_intersection: degenerate line");
    if (s.degenerate()) {
        if (orient(la, lb, s.a) == Orientation::Collinear)
            return SegmentIntersection::at(s.a);
        return SegmentIntersection::empty();
    }
    Rational d1 = cross(la, lb, s.a);
    Rational d2 = cross(la, lb, s.b);
    if (d1 == 0 && d2 == 0) return SegmentIntersection::along(s);
    if ((d1 > 0 && d2 > 0) || (d1 < 0 && d2 < 0)) return SegmentIntersection::empty();
    Rational t = d1 / (d1 - d2);
    return SegmentIntersection::at(lerp(s.a, s.b, t));
}

}  // namespace mutvis
