#pragma once
// Exact rational 2D kernel. Every predicate in this project runs on
// arbitrary-precision rationals; floating point appears only in the SVG
// renderer.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ups {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // kept canonical by the library

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct check_error : std::logic_error {
    using std::logic_error::logic_error;
};

#define UPS_CHECK(cond, msg)                                        \
    do {                                                            \
        if (!(cond)) throw ::ups::check_error(std::string("check failed: ") + (msg)); \
    } while (0)

struct Point2 {
    Rational x, y;
    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point2& o) const { return !(*this == o); }
};

Point2 operator+(const Point2& a, const Point2& b);
Point2 operator-(const Point2& a, const Point2& b);
Point2 operator*(const Rational& s, const Point2& p);

struct Segment {
    Point2 a, b;
};

// "p/q" in canonical form, plain "p" when q = 1.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// Sign of the cross product (b-a) x (c-a): +1 counterclockwise, 0 collinear,
// -1 clockwise (standard orientation, y up).
int orient(const Point2& a, const Point2& b, const Point2& c);

enum class SegRel { disjoint, share_endpoint, cross, overlap, touch_interior };
const char* to_string(SegRel r);

// Exact classification of how two segments meet.
SegRel segments_cross(const Segment& s1, const Segment& s2);

// Strict convex position: the points, in the given cyclic order, are the
// vertices of a convex polygon with no three collinear.
bool is_convex_position(const std::vector<Point2>& pts);

// Weak variant: collinear runs are allowed as long as the sequence is the
// boundary walk of its convex hull (used for segment unions, where points on
// one segment are collinear by construction).
bool is_weakly_convex_position(const std::vector<Point2>& pts);

bool point_in_triangle(const Point2& p, const Point2& a, const Point2& b, const Point2& c);

// Intersection of the infinite lines through (a,b) and (c,d); nullopt if parallel.
std::optional<Point2> line_intersection(const Point2& a, const Point2& b,
                                        const Point2& c, const Point2& d);

// True iff p lies strictly between a and b on segment ab (collinearity is
// checked).
bool strictly_between(const Point2& a, const Point2& p, const Point2& b);

}  // namespace ups
