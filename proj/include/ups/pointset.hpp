#pragma once
// Universal point sets for 2-outerplanar graphs.
//
// The set consists of N points p_1..p_N on the upper half circle (p_1 west,
// p_N east, listed clockwise along the arc) plus, for every j in 2..N-1, a
// sub-point-set S_j nested inside the triangle p_{j-1} p_j p_{j+1}: a center
// c_j on the ray O->p_j, three point-carrying segments leaving c_j (one
// toward O, one tilted toward p_{j-1}, one toward p_{j+1}) and, optionally,
// a pair of petal points beside every segment point.
//
// sqrt mode sizes the segments with the dense/sparse scheme (capacity n on
// ceil(sqrt(n)) designated points, capacity ceil(sqrt(n)) elsewhere); xi mode
// sizes them with the ruler capacity sequence, giving O(n log n) points.

#include "ups/geom.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ups {

enum class PointSetMode { sqrt_mode, xi_mode };
const char* to_string(PointSetMode m);
PointSetMode pointset_mode_from_string(const std::string& s);

enum class SegKind { outer, center, segN, segPlus, segMinus, petalL, petalR };
const char* to_string(SegKind k);
SegKind segkind_from_string(const std::string& s);

// A point slot inside the set. For segment kinds, slot runs 1..capacity
// (slot capacity is the segment tip). For petal kinds, slot encodes
// (sigma, z) as sigma*capacity + (z-1) with sigma 0=segN, 1=segPlus,
// 2=segMinus and z in 1..capacity. outer/center ignore slot.
struct PointRef {
    long j = 0;
    SegKind kind = SegKind::outer;
    long slot = 0;
    bool operator==(const PointRef& o) const = default;
    bool operator<(const PointRef& o) const {
        if (j != o.j) return j < o.j;
        if (kind != o.kind) return kind < o.kind;
        return slot < o.slot;
    }
};

struct PetalPair {
    Point2 l, r;
};

struct SubPointSet {
    long j = 0;
    long capacity = 0;
    Point2 center;                  // c_j
    std::vector<Point2> seg_N;      // z=1..capacity, last = apex (the point nearest O)
    std::vector<Point2> seg_plus;   // toward p_{j+1}
    std::vector<Point2> seg_minus;  // toward p_{j-1}
    std::vector<PetalPair> petals_N, petals_plus, petals_minus;  // per z, if petals built

    const std::vector<Point2>& seg(int sigma) const;  // 0=N 1=plus 2=minus
    const std::vector<PetalPair>& petals(int sigma) const;
};

struct UniversalPointSet {
    long n = 0;
    PointSetMode mode = PointSetMode::sqrt_mode;
    bool with_petals = false;
    long N = 0;
    Point2 origin;    // center of the half circle
    Rational radius;
    std::vector<Point2> outer;      // size N, index j-1
    std::vector<long> capacity;     // size N+1, capacity[j]; endpoints have capacity 1
    std::vector<bool> dense_point;  // sqrt mode: point j is a dense slot
    std::map<long, SubPointSet> subsets;  // j = 2..N-1

    const Point2& point(const PointRef& ref) const;
    unsigned long long subset_point_count() const;  // segment points + centers, all j
    unsigned long long petal_point_count() const;
    unsigned long long total_point_count() const;   // outer + subsets + petals
    std::vector<Point2> all_points() const;

    // Structural invariants: pairwise distinct points, each S_j inside its
    // triangle, per-subset angular wedges disjoint, petal containment.
    void validate() const;
};

// Closed-form counts used by the acceptance tests (square n).
unsigned long long sqrt_mode_subset_formula(long n, bool with_petals);

// Ruler capacity sequence xi_j = 2^(nu_2(j)); order-majorizes any weight
// sequence summing to n within 2n slots.
std::vector<long> xi_sequence(long count);

// Greedy order-preserving assignment: each weight goes to the first free
// slot (after the previous one) whose capacity covers it. Returns 1-based
// slot indices, or empty if it does not fit.
std::vector<long> xi_greedy_assign(const std::vector<long>& weights,
                                   const std::vector<long>& caps);

// Total points of a point set with the given parameters, without building
// geometry (used for size scaling reports).
unsigned long long point_count_formula(long n, PointSetMode mode, bool with_petals);

UniversalPointSet build_point_set(long n, PointSetMode mode, bool with_petals);

struct VisibilityReport {
    bool ok = true;
    std::string violation;          // first failing assertion, human readable
    unsigned long long checked = 0; // number of orientation assertions evaluated
};

// Exact verification of the visibility properties: (A) the fan order around
// each p_j; (B)/(C) the order around every viewer point on the lower/higher
// side plus the half-plane separation of the sets between viewer and target.
// Exhaustive when exhaustive=true, otherwise `samples` random probes.
VisibilityReport check_visibility(const UniversalPointSet& ps, bool exhaustive,
                                  unsigned long long samples = 100000, std::uint64_t seed = 1);

// Convex-position check for the union of segments over j in [j_lo, j_hi]
// (weak convexity: points on one segment are collinear by construction),
// including the variants with seg_N at either extreme.
bool check_convexity(const UniversalPointSet& ps, long j_lo, long j_hi);

}  // namespace ups
