#include "doctest.h"

#include <random>

#include "mutvis/geometry.hpp"

using namespace mutvis;

namespace {
Point pt(long long x, long long y) { return Point{Rational(x), Rational(y)}; }
}  // namespace

TEST_CASE("orient basic cases") {
    CHECK(orient(pt(0, 0), pt(1, 0), pt(0, 1)) == Orientation::CCW);
    CHECK(orient(pt(0, 0), pt(1, 1), pt(2, 2)) == Orientation::Collinear);
    CHECK(orient(pt(0, 0), pt(0, 1), pt(1, 1)) == Orientation::CW);
}

TEST_CASE("orient is antisymmetric on random triples") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int i = 0; i < 500; ++i) {
        Point p = pt(d(rng), d(rng)), q = pt(d(rng), d(rng)), r = pt(d(rng), d(rng));
        Orientation a = orient(p, q, r);
        Orientation b = orient(p, r, q);
        if (a == Orientation::Collinear) {
            CHECK(b == Orientation::Collinear);
        } else {
            CHECK(a != b);
            CHECK(b != Orientation::Collinear);
        }
    }
}

TEST_CASE("orient agrees with floating point away from sign flips") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int i = 0; i < 2000; ++i) {
        Point p = pt(d(rng), d(rng)), q = pt(d(rng), d(rng)), r = pt(d(rng), d(rng));
        double fx = (to_double(q.x) - to_double(p.x)) * (to_double(r.y) - to_double(p.y)) -
                    (to_double(q.y) - to_double(p.y)) * (to_double(r.x) - to_double(p.x));
        if (std::abs(fx) <= 1e-9) continue;
        Orientation o = orient(p, q, r);
        CHECK(o == (fx > 0 ? Orientation::CCW : Orientation::CW));
    }
}

TEST_CASE("segment_intersection examples") {
    auto x = segment_intersection({pt(0, 0), pt(2, 2)}, {pt(0, 2), pt(2, 0)});
    REQUIRE(x.kind == SegmentIntersection::Kind::At);
    CHECK(x.point == pt(1, 1));

    auto e = segment_intersection({pt(0, 0), pt(1, 0)}, {pt(2, 0), pt(3, 0)});
    CHECK(e.kind == SegmentIntersection::Kind::Empty);

    auto o = segment_intersection({pt(0, 0), pt(3, 0)}, {pt(1, 0), pt(2, 0)});
    REQUIRE(o.kind == SegmentIntersection::Kind::Overlap);
    CHECK(((o.overlap.a == pt(1, 0) && o.overlap.b == pt(2, 0)) ||
           (o.overlap.a == pt(2, 0) && o.overlap.b == pt(1, 0))));
}

TEST_CASE("segment_intersection endpoint touch counts as At") {
    auto x = segment_intersection({pt(0, 0), pt(2, 0)}, {pt(2, 0), pt(2, 5)});
    REQUIRE(x.kind == SegmentIntersection::Kind::At);
    CHECK(x.point == pt(2, 0));
}

TEST_CASE("segment_intersection rejects degenerate input") {
    CHECK_THROWS_AS(segment_intersection({pt(0, 0), pt(0, 0)}, {pt(1, 1), pt(2, 2)}), Error);
}

TEST_CASE("segment_intersection is symmetric on random segments") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> d(-50, 50);
    int nontrivial = 0;
    for (int i = 0; i < 2000; ++i) {
        Segment s1{pt(d(rng), d(rng)), pt(d(rng), d(rng))};
        Segment s2{pt(d(rng), d(rng)), pt(d(rng), d(rng))};
        if (s1.degenerate() || s2.degenerate()) continue;
        auto a = segment_intersection(s1, s2);
        auto b = segment_intersection(s2, s1);
        CHECK(a.kind == b.kind);
        if (a.kind == SegmentIntersection::Kind::At) {
            CHECK(a.point == b.point);
            ++nontrivial;
        }
        if (a.kind == SegmentIntersection::Kind::Overlap) {
            bool same = (a.overlap.a == b.overlap.a && a.overlap.b == b.overlap.b) ||
                        (a.overlap.a == b.overlap.b && a.overlap.b == b.overlap.a);
            CHECK(same);
        }
    }
    CHECK(nontrivial > 50);  // the sample actually exercised intersections
}

TEST_CASE("point_on_segment") {
    CHECK(point_on_segment(pt(1, 1), {pt(0, 0), pt(2, 2)}));
    CHECK_FALSE(point_on_segment(pt(3, 3), {pt(0, 0), pt(2, 2)}));
    CHECK(point_on_segment(pt(0, 0), {pt(0, 0), pt(2, 2)}));
}

TEST_CASE("rational string round trip") {
    CHECK(rational_from_string("3/4") == Rational(3, 4));
    CHECK(rational_from_string("-7") == Rational(-7));
    CHECK(rational_from_string("1.25") == Rational(5, 4));
    CHECK(rational_from_string("-0.5") == Rational(-1, 2));
    CHECK(rational_to_string(Rational(3, 4)) == "3/4");
    CHECK(rational_to_string(Rational(-7)) == "-7");
    CHECK_THROWS_AS(rational_from_string("1/0"), Error);
    CHECK_THROWS_AS(rational_from_string("abc"), Error);
}

TEST_CASE("line_segment_intersection") {
    auto x = line_segment_intersection(pt(0, 1), pt(1, 1), {pt(2, 0), pt(2, 5)});
    REQUIRE(x.kind == SegmentIntersection::Kind::At);
    CHECK(x.point == pt(2, 1));
    auto e = line_segment_intersection(pt(0, 0), pt(1, 0), {pt(0, 1), pt(5, 2)});
    CHECK(e.kind == SegmentIntersection::Kind::Empty);
}
