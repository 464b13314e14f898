#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ups/geom.hpp"

#include <random>

using namespace ups;

namespace {
Point2 P(int x, int y) { return Point2{Rational(x), Rational(y)}; }
Point2 P(const char* x, const char* y) {
    return Point2{rational_from_string(x), rational_from_string(y)};
}
}  // namespace

TEST_CASE("rational string round trip") {
    CHECK(rational_to_string(Rational(1, 2)) == "1/2");
    CHECK(rational_to_string(Rational(4, 2)) == "2");
    CHECK(rational_to_string(Rational(-3, 9)) == "-1/3");
    CHECK(rational_from_string("7/21") == Rational(1, 3));
    CHECK(rational_from_string("-5") == Rational(-5));
    CHECK_THROWS_AS(rational_from_string("1/0"), input_error);
    CHECK_THROWS_AS(rational_from_string("x"), input_error);
}

TEST_CASE("orientation pinned examples") {
    CHECK(orient(P(0, 0), P(1, 0), P(0, 1)) == 1);
    CHECK(orient(P(0, 0), P(1, 1), P(2, 2)) == 0);
    CHECK(orient(P(0, 0), P(0, 1), P(1, 0)) == -1);
}

TEST_CASE("orientation antisymmetry under swaps") {
    std::mt19937_64 rng(7);
    auto rnd = [&]() {
        return Rational((long)(rng() % 2001) - 1000, (long)(rng() % 40) + 1);
    };
    for (int it = 0; it < 300; ++it) {
        Point2 a{rnd(), rnd()}, b{rnd(), rnd()}, c{rnd(), rnd()};
        int o = orient(a, b, c);
        CHECK(orient(b, a, c) == -o);
        CHECK(orient(a, c, b) == -o);
        CHECK(orient(c, b, a) == -o);
        CHECK(orient(b, c, a) == o);
        CHECK(orient(c, a, b) == o);
    }
}

TEST_CASE("segment classification pinned examples") {
    CHECK(segments_cross({P(0, 0), P(1, 1)}, {P(0, 1), P(1, 0)}) == SegRel::cross);
    CHECK(segments_cross({P(0, 0), P(1, 0)}, {P(1, 0), P(1, 1)}) == SegRel::share_endpoint);
    CHECK(segments_cross({P(0, 0), P(2, 0)}, {P(1, 0), P(3, 0)}) == SegRel::overlap);
    CHECK(segments_cross({P(0, 0), P(2, 0)}, {P(1, 0), P(1, 1)}) == SegRel::touch_interior);
    CHECK(segments_cross({P(0, 0), P(1, 0)}, {P(0, 1), P(1, 1)}) == SegRel::disjoint);
    // collinear meeting at one endpoint
    CHECK(segments_cross({P(0, 0), P(1, 0)}, {P(1, 0), P(2, 0)}) == SegRel::share_endpoint);
    // identical segments overlap
    CHECK(segments_cross({P(0, 0), P(1, 0)}, {P(0, 0), P(1, 0)}) == SegRel::overlap);
    // endpoint of one interior to the other, collinear
    CHECK(segments_cross({P(0, 0), P(3, 0)}, {P(1, 0), P(2, 0)}) == SegRel::overlap);
}

TEST_CASE("segment classification is symmetric") {
    std::mt19937_64 rng(11);
    auto rp = [&]() { return P((int)(rng() % 7), (int)(rng() % 7)); };
    int checked = 0;
    while (checked < 500) {
        Point2 a = rp(), b = rp(), c = rp(), d = rp();
        if (a == b || c == d) continue;
        ++checked;
        CHECK(segments_cross({a, b}, {c, d}) == segments_cross({c, d}, {a, b}));
        CHECK(segments_cross({a, b}, {c, d}) == segments_cross({b, a}, {c, d}));
    }
}

// independent oracle: solve the two line equations exactly, then decide the
// classification from the intersection parameters
namespace {
SegRel oracle(const Segment& s1, const Segment& s2) {
    Rational dx1 = s1.b.x - s1.a.x, dy1 = s1.b.y - s1.a.y;
    Rational dx2 = s2.b.x - s2.a.x, dy2 = s2.b.y - s2.a.y;
    Rational den = dx1 * dy2 - dy1 * dx2;
    auto endpoint_shared = [&]() {
        return s1.a == s2.a || s1.a == s2.b || s1.b == s2.a || s1.b == s2.b;
    };
    if (den == 0) {
        // parallel: collinear iff s2.a on line(s1)
        if (orient(s1.a, s1.b, s2.a) != 0) return SegRel::disjoint;
        // project on the dominant axis
        auto key = [&](const Point2& p) { return dx1 != 0 ? p.x : p.y; };
        Rational lo1 = std::min(key(s1.a), key(s1.b)), hi1 = std::max(key(s1.a), key(s1.b));
        Rational lo2 = std::min(key(s2.a), key(s2.b)), hi2 = std::max(key(s2.a), key(s2.b));
        Rational lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        if (lo > hi) return SegRel::disjoint;
        if (lo == hi) return SegRel::share_endpoint;
        return SegRel::overlap;
    }
    Rational t = ((s2.a.x - s1.a.x) * dy2 - (s2.a.y - s1.a.y) * dx2) / den;
    Rational u = ((s2.a.x - s1.a.x) * dy1 - (s2.a.y - s1.a.y) * dx1) / den;
    if (t < 0 || t > 1 || u < 0 || u > 1) return SegRel::disjoint;
    bool t_end = t == 0 || t == 1;
    bool u_end = u == 0 || u == 1;
    if (t_end && u_end) return endpoint_shared() ? SegRel::share_endpoint : SegRel::disjoint;
    if (t_end || u_end) return SegRel::touch_interior;
    return SegRel::cross;
}
}  // namespace

TEST_CASE("segment classification agrees with the line-equation oracle") {
    std::mt19937_64 rng(13);
    auto rp = [&]() { return P((int)(rng() % 5), (int)(rng() % 5)); };
    int checked = 0;
    while (checked < 4000) {
        Point2 a = rp(), b = rp(), c = rp(), d = rp();
        if (a == b || c == d) continue;
        ++checked;
        CAPTURE(rational_to_string(a.x));
        CHECK(segments_cross({a, b}, {c, d}) == oracle({a, b}, {c, d}));
    }
}

TEST_CASE("convex position pinned examples") {
    CHECK(is_convex_position({P(0, 0), P(1, 0), P(1, 1), P(0, 1)}));
    CHECK_FALSE(is_convex_position({P(0, 0), P(2, 0), P("1", "1/10"), P(0, 2)}));
    CHECK_FALSE(is_convex_position({P(0, 0), P(1, 0), P(2, 0)}));
    // double-wound interleaving of a convex hexagon must fail
    std::vector<Point2> hex = {P(4, 0), P(2, 3), P(-2, 3), P(-4, 0), P(-2, -3), P(2, -3)};
    CHECK(is_convex_position(hex));
    std::vector<Point2> interleaved = {hex[0], hex[2], hex[4], hex[1], hex[3], hex[5]};
    CHECK_FALSE(is_convex_position(interleaved));
}

TEST_CASE("weak convex position allows collinear runs") {
    std::vector<Point2> run = {P(0, 0), P(1, 0), P(2, 0), P(3, 1), P(3, 2), P(0, 3)};
    CHECK(is_weakly_convex_position(run));
    CHECK_FALSE(is_convex_position(run));
    // a reflex point breaks it
    std::vector<Point2> reflex = {P(0, 0), P(1, 0), P(2, 0), P(3, 1), P("2", "3/2"), P(0, 3)};
    CHECK_FALSE(is_weakly_convex_position(reflex));
    // all collinear is not a polygon
    CHECK_FALSE(is_weakly_convex_position({P(0, 0), P(1, 0), P(2, 0), P(3, 0)}));
}

TEST_CASE("point in triangle") {
    CHECK(point_in_triangle(P(1, 1), P(0, 0), P(4, 0), P(0, 4)));
    CHECK_FALSE(point_in_triangle(P(2, 2), P(0, 0), P(4, 0), P(0, 4)));  // on the edge
    CHECK_FALSE(point_in_triangle(P(5, 5), P(0, 0), P(4, 0), P(0, 4)));
}

TEST_CASE("line intersection") {
    auto q = line_intersection(P(0, 0), P(1, 1), P(0, 1), P(1, 0));
    REQUIRE(q.has_value());
    CHECK(q->x == Rational(1, 2));
    CHECK(q->y == Rational(1, 2));
    CHECK_FALSE(line_intersection(P(0, 0), P(1, 0), P(0, 1), P(1, 1)).has_value());
}
