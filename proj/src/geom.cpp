#include "ups/geom.hpp"

#include <algorithm>

namespace ups {

Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

Rational rational_from_string(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, pos));
        BigInt den(s.substr(pos + 1));
        if (den <= 0) throw input_error("rational with non-positive denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw input_error("bad rational '" + s + "': " + e.what());
    }
}

static int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

int orient(const Point2& a, const Point2& b, const Point2& c) {
    Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sign_of(det);
}

const char* to_string(SegRel r) {
    switch (r) {
        case SegRel::disjoint: return "disjoint";
        case SegRel::share_endpoint: return "share_endpoint";
        case SegRel::cross: return "cross";
        case SegRel::overlap: return "overlap";
        case SegRel::touch_interior: return "touch_interior";
    }
    return "?";
}

bool strictly_between(const Point2& a, const Point2& p, const Point2& b) {
    if (orient(a, b, p) != 0) return false;
    if (p == a || p == b) return false;
    // p on line ab: compare along the dominant axis
    if (a.x != b.x) return (a.x < p.x) != (b.x < p.x);
    return (a.y < p.y) != (b.y < p.y);
}

// weakly between: p in [a,b] on the line (p may equal an endpoint)
static bool on_segment(const Point2& a, const Point2& p, const Point2& b) {
    return p == a || p == b || strictly_between(a, p, b);
}

SegRel segments_cross(const Segment& s1, const Segment& s2) {
    const Point2 &p1 = s1.a, &q1 = s1.b, &p2 = s2.a, &q2 = s2.b;
    UPS_CHECK(!(p1 == q1) && !(p2 == q2), "degenerate segment");

    int o1 = orient(p1, q1, p2);
    int o2 = orient(p1, q1, q2);
    int o3 = orient(p2, q2, p1);
    int o4 = orient(p2, q2, q1);

    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        // Collinear: order along the common line.
        auto less = [&](const Point2& a, const Point2& b) {
            return a.x != b.x ? a.x < b.x : a.y < b.y;
        };
        Point2 lo1 = p1, hi1 = q1, lo2 = p2, hi2 = q2;
        if (less(hi1, lo1)) std::swap(lo1, hi1);
        if (less(hi2, lo2)) std::swap(lo2, hi2);
        const Point2& lo = less(lo1, lo2) ? lo2 : lo1;  // max of lows
        const Point2& hi = less(hi1, hi2) ? hi1 : hi2;  // min of highs
        if (less(hi, lo)) return SegRel::disjoint;
        if (lo == hi) return SegRel::share_endpoint;  // touch at a single shared endpoint
        return SegRel::overlap;
    }

    bool shared = (p1 == p2) || (p1 == q2) || (q1 == p2) || (q1 == q2);
    if (shared) return SegRel::share_endpoint;

    if (((o1 > 0) != (o2 > 0)) && o1 != 0 && o2 != 0 &&
        ((o3 > 0) != (o4 > 0)) && o3 != 0 && o4 != 0)
        return SegRel::cross;

    if (o1 == 0 && on_segment(p1, p2, q1)) return SegRel::touch_interior;
    if (o2 == 0 && on_segment(p1, q2, q1)) return SegRel::touch_interior;
    if (o3 == 0 && on_segment(p2, p1, q2)) return SegRel::touch_interior;
    if (o4 == 0 && on_segment(p2, q1, q2)) return SegRel::touch_interior;

    return SegRel::disjoint;
}

namespace {

bool all_distinct(const std::vector<Point2>& pts) {
    std::vector<const Point2*> v;
    v.reserve(pts.size());
    for (const auto& p : pts) v.push_back(&p);
    std::sort(v.begin(), v.end(), [](const Point2* a, const Point2* b) {
        return a->x != b->x ? a->x < b->x : a->y < b->y;
    });
    for (size_t i = 1; i < v.size(); ++i)
        if (*v[i - 1] == *v[i]) return false;
    return true;
}

// At most two sign changes in the cyclic sequence of nonzero deltas along
// each axis. Rules out multiply-wound sequences that pass the turn test.
bool monotone_runs_ok(const std::vector<Point2>& pts) {
    const size_t m = pts.size();
    for (int axis = 0; axis < 2; ++axis) {
        int prev = 0, changes = 0, first = 0;
        for (size_t i = 0; i < m; ++i) {
            const Point2& a = pts[i];
            const Point2& b = pts[(i + 1) % m];
            Rational d = axis == 0 ? b.x - a.x : b.y - a.y;
            int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
            if (s == 0) continue;
            if (prev == 0) {
                prev = s;
                first = s;
                continue;
            }
            if (s != prev) ++changes;
            prev = s;
        }
        if (prev != 0 && first != 0 && prev != first) ++changes;  // wrap
        if (changes > 2) return false;
    }
    return true;
}

}  // namespace

bool is_convex_position(const std::vector<Point2>& pts) {
    const size_t m = pts.size();
    if (m < 3) return false;
    if (!all_distinct(pts)) return false;
    int sgn = 0;
    for (size_t i = 0; i < m; ++i) {
        int o = orient(pts[i], pts[(i + 1) % m], pts[(i + 2) % m]);
        if (o == 0) return false;
        if (sgn == 0) sgn = o;
        else if (o != sgn) return false;
    }
    return monotone_runs_ok(pts);
}

bool is_weakly_convex_position(const std::vector<Point2>& pts) {
    const size_t m = pts.size();
    if (m < 3) return false;
    if (!all_distinct(pts)) return false;
    int sgn = 0;
    for (size_t i = 0; i < m; ++i) {
        const Point2& a = pts[i];
        const Point2& b = pts[(i + 1) % m];
        const Point2& c = pts[(i + 2) % m];
        int o = orient(a, b, c);
        if (o == 0) {
            // collinear step must keep advancing in the same direction
            Rational dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
            if (dot <= 0) return false;
            continue;
        }
        if (sgn == 0) sgn = o;
        else if (o != sgn) return false;
    }
    if (sgn == 0) return false;  // everything collinear
    return monotone_runs_ok(pts);
}

bool point_in_triangle(const Point2& p, const Point2& a, const Point2& b, const Point2& c) {
    int o1 = orient(a, b, p);
    int o2 = orient(b, c, p);
    int o3 = orient(c, a, p);
    return o1 != 0 && o1 == o2 && o2 == o3;
}

std::optional<Point2> line_intersection(const Point2& a, const Point2& b,
                                        const Point2& c, const Point2& d) {
    Rational d1x = b.x - a.x, d1y = b.y - a.y;
    Rational d2x = d.x - c.x, d2y = d.y - c.y;
    Rational den = d1x * d2y - d1y * d2x;
    if (den == 0) return std::nullopt;
    Rational t = ((c.x - a.x) * d2y - (c.y - a.y) * d2x) / den;
    return Point2{a.x + t * d1x, a.y + t * d1y};
}

}  // namespace ups
