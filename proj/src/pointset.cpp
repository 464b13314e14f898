#include "ups/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ups {

const char* to_string(PointSetMode m) {
    return m == PointSetMode::sqrt_mode ? "sqrt" : "xi";
}

PointSetMode pointset_mode_from_string(const std::string& s) {
    if (s == "sqrt") return PointSetMode::sqrt_mode;
    if (s == "xi") return PointSetMode::xi_mode;
    throw input_error("unknown point set mode: " + s);
}

const char* to_string(SegKind k) {
    switch (k) {
        case SegKind::outer: return "outer";
        case SegKind::center: return "C";
        case SegKind::segN: return "N";
        case SegKind::segPlus: return "+";
        case SegKind::segMinus: return "-";
        case SegKind::petalL: return "petalL";
        case SegKind::petalR: return "petalR";
    }
    return "?";
}

SegKind segkind_from_string(const std::string& s) {
    if (s == "outer") return SegKind::outer;
    if (s == "C") return SegKind::center;
    if (s == "N") return SegKind::segN;
    if (s == "+") return SegKind::segPlus;
    if (s == "-") return SegKind::segMinus;
    if (s == "petalL") return SegKind::petalL;
    if (s == "petalR") return SegKind::petalR;
    throw input_error("unknown segment kind: " + s);
}

const std::vector<Point2>& SubPointSet::seg(int sigma) const {
    switch (sigma) {
        case 0: return seg_N;
        case 1: return seg_plus;
        default: return seg_minus;
    }
}

const std::vector<PetalPair>& SubPointSet::petals(int sigma) const {
    switch (sigma) {
        case 0: return petals_N;
        case 1: return petals_plus;
        default: return petals_minus;
    }
}

const Point2& UniversalPointSet::point(const PointRef& ref) const {
    UPS_CHECK(ref.j >= 1 && ref.j <= N, "point ref j out of range");
    if (ref.kind == SegKind::outer) return outer[ref.j - 1];
    auto it = subsets.find(ref.j);
    UPS_CHECK(it != subsets.end(), "point ref into missing subset");
    const SubPointSet& s = it->second;
    switch (ref.kind) {
        case SegKind::center:
            return s.center;
        case SegKind::segN:
        case SegKind::segPlus:
        case SegKind::segMinus: {
            const auto& v = ref.kind == SegKind::segN    ? s.seg_N
                            : ref.kind == SegKind::segPlus ? s.seg_plus
                                                           : s.seg_minus;
            UPS_CHECK(ref.slot >= 1 && ref.slot <= (long)v.size(), "segment slot out of range");
            return v[ref.slot - 1];
        }
        case SegKind::petalL:
        case SegKind::petalR: {
            long sigma = ref.slot / s.capacity;
            long z = ref.slot % s.capacity;  // 0-based
            UPS_CHECK(sigma >= 0 && sigma <= 2, "petal slot out of range");
            const auto& fam = s.petals(static_cast<int>(sigma));
            UPS_CHECK(!fam.empty(), "point set built without petals");
            UPS_CHECK(z >= 0 && z < (long)fam.size(), "petal slot out of range");
            return ref.kind == SegKind::petalL ? fam[z].l : fam[z].r;
        }
        default: break;
    }
    throw check_error("unresolvable point ref");
}

unsigned long long UniversalPointSet::subset_point_count() const {
    unsigned long long c = 0;
    for (const auto& [j, s] : subsets) c += 3ull * s.capacity + 1;
    return c;
}

unsigned long long UniversalPointSet::petal_point_count() const {
    if (!with_petals) return 0;
    unsigned long long c = 0;
    for (const auto& [j, s] : subsets) c += 6ull * s.capacity;
    return c;
}

unsigned long long UniversalPointSet::total_point_count() const {
    return (unsigned long long)N + subset_point_count() + petal_point_count();
}

std::vector<Point2> UniversalPointSet::all_points() const {
    std::vector<Point2> v;
    v.reserve(total_point_count());
    for (const auto& p : outer) v.push_back(p);
    for (const auto& [j, s] : subsets) {
        v.push_back(s.center);
        for (int sigma = 0; sigma < 3; ++sigma) {
            for (const auto& p : s.seg(sigma)) v.push_back(p);
            for (const auto& pp : s.petals(sigma)) {
                v.push_back(pp.l);
                v.push_back(pp.r);
            }
        }
    }
    return v;
}

unsigned long long sqrt_mode_subset_formula(long n, bool with_petals) {
    // closed form for square n: (sqrt(n)-1) dense subsets and (n-1) sparse ones
    long s = (long)std::llround(std::sqrt((double)n));
    UPS_CHECK(s * s == n, "formula only applies to square n");
    unsigned long long per_dense = with_petals ? 9ull * n + 1 : 3ull * n + 1;
    unsigned long long per_sparse = with_petals ? 9ull * s + 1 : 3ull * s + 1;
    return (unsigned long long)(s - 1) * per_dense + (unsigned long long)(n - 1) * per_sparse;
}

std::vector<long> xi_sequence(long count) {
    UPS_CHECK(count >= 1, "xi_sequence needs count >= 1");
    std::vector<long> xs(count);
    for (long j = 1; j <= count; ++j) {
        long v = 1;
        long x = j;
        while (x % 2 == 0) {
            v <<= 1;
            x >>= 1;
        }
        xs[j - 1] = v;
    }
    return xs;
}

std::vector<long> xi_greedy_assign(const std::vector<long>& weights,
                                   const std::vector<long>& caps) {
    std::vector<long> slots;
    slots.reserve(weights.size());
    long j = 0;  // last used slot (1-based)
    for (long w : weights) {
        long k = j + 1;
        while (k <= (long)caps.size() && caps[k - 1] < w) ++k;
        if (k > (long)caps.size()) return {};
        slots.push_back(k);
        j = k;
    }
    return slots;
}

namespace {

long ceil_sqrt(long n) {
    long s = (long)std::floor(std::sqrt((double)n));
    while (s * s < n) ++s;
    while ((s - 1) * (s - 1) >= n) --s;
    return s;
}

Rational cross2(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }

// round a rational in (0,1) to a fraction over 2^bits
Rational grid_round_up(const Rational& x, unsigned bits) {
    BigInt den = BigInt(1) << bits;
    BigInt num = (numerator(x) * den) / denominator(x);
    Rational r(num, den);
    while (r < x) r += Rational(1, den);
    return r;
}

Rational grid_round_down(const Rational& x, unsigned bits) {
    BigInt den = BigInt(1) << bits;
    BigInt num = (numerator(x) * den) / denominator(x);
    Rational r(num, den);
    while (r > x) r -= Rational(1, den);
    return r;
}

struct SegFrame {
    const Point2* prev;  // point before pt_z on the segment (pt_0 = center)
    const Point2* cur;
};

}  // namespace

unsigned long long point_count_formula(long n, PointSetMode mode, bool with_petals) {
    UPS_CHECK(n >= 3, "n >= 3 required");
    unsigned long long total = 0;
    if (mode == PointSetMode::sqrt_mode) {
        long s = ceil_sqrt(n);
        long N = n + s;
        total = N;
        for (long j = 2; j <= N - 1; ++j) {
            bool dense = (j % (s + 1)) == 0 && j / (s + 1) <= s;
            unsigned long long cap = dense ? n : s;
            total += 3 * cap + 1 + (with_petals ? 6 * cap : 0);
        }
    } else {
        long N = 2 * n + 2;
        total = N;
        auto xs = xi_sequence(2 * n);
        for (long j = 2; j <= N - 1; ++j) {
            unsigned long long cap = xs[j - 2];
            total += 3 * cap + 1 + (with_petals ? 6 * cap : 0);
        }
    }
    return total;
}

UniversalPointSet build_point_set(long n, PointSetMode mode, bool with_petals) {
    if (n < 3) throw input_error("point set requires n >= 3");

    UniversalPointSet ps;
    ps.n = n;
    ps.mode = mode;
    ps.with_petals = with_petals;
    ps.origin = Point2{0, 0};
    ps.radius = Rational(BigInt(1) << 20);

    long s = ceil_sqrt(n);
    ps.N = mode == PointSetMode::sqrt_mode ? n + s : 2 * n + 2;
    const long N = ps.N;

    // Outer points: near-uniform angles theta_j = pi*(N+1-j)/(N+1) realized as
    // rational points via the half-angle parametrization; only the order and
    // strict convexity matter downstream, never exact uniformity.
    ps.outer.resize(N);
    {
        const long double pi = 3.14159265358979323846264338327950288L;
        const BigInt Q = BigInt(1) << 20;
        Rational prev_t;
        for (long j = 1; j <= N; ++j) {
            long double half = pi * (long double)(N + 1 - j) / (2.0L * (N + 1));
            long double t = std::tan(half);
            BigInt num = BigInt((long long)std::llroundl(t * (long double)(1 << 20)));
            Rational tr(num, Q);
            UPS_CHECK(tr > 0, "outer parameter must be positive");
            if (j > 1) UPS_CHECK(tr < prev_t, "outer parameters must strictly decrease");
            prev_t = tr;
            Rational t2 = tr * tr;
            Rational den = 1 + t2;
            ps.outer[j - 1] = Point2{ps.radius * (1 - t2) / den, ps.radius * (2 * tr) / den};
        }
    }

    // capacities
    ps.capacity.assign(N + 1, 1);
    ps.dense_point.assign(N + 1, false);
    if (mode == PointSetMode::sqrt_mode) {
        for (long i = 1; i <= s; ++i) {
            long idx = i * s + i;
            if (idx <= N) ps.dense_point[idx] = true;
        }
        for (long j = 2; j <= N - 1; ++j) ps.capacity[j] = ps.dense_point[j] ? n : s;
    } else {
        auto xs = xi_sequence(2 * n);
        for (long j = 2; j <= N - 1; ++j) ps.capacity[j] = xs[j - 2];
    }

    // Sliver floor: fraction along O->p_j where the chord p_{j-1} p_{j+1}
    // crosses. Centers sit at a global fraction f just above every floor so
    // that they are concyclic (hence strictly convex) and each S_j still fits
    // inside its triangle.
    Rational tau_max = 0;
    for (long j = 2; j <= N - 1; ++j) {
        const Point2& A = ps.outer[j - 2];
        const Point2& B = ps.outer[j];
        const Point2& P = ps.outer[j - 1];
        Point2 BA = B - A;
        Rational den = cross2(BA, P);
        UPS_CHECK(den != 0, "degenerate chord");
        Rational tau = cross2(BA, A) / den;
        UPS_CHECK(tau > 0 && tau < 1, "chord crossing out of range");
        if (tau > tau_max) tau_max = tau;
    }
    Rational f = grid_round_up(tau_max + (1 - tau_max) / 64, 40);
    UPS_CHECK(f > tau_max && f < 1, "center fraction out of range");
    Rational nu = grid_round_down((1 - tau_max / f) / 2, 60);
    UPS_CHECK(nu > 0, "apex dip vanished");
    UPS_CHECK((1 - nu) * f > tau_max, "apex below sliver floor");

    const Rational lambda(1, 2);  // arm tilt: halve the radial dip of the neighbor chord
    const Rational beta(1, 3);    // arm length as a fraction of the neighbor chord

    for (long j = 2; j <= N - 1; ++j) {
        SubPointSet sub;
        sub.j = j;
        sub.capacity = ps.capacity[j];
        const long cap = sub.capacity;
        const Point2& pj = ps.outer[j - 1];
        const Point2& pw = ps.outer[j - 2];  // west neighbor p_{j-1}
        const Point2& pe = ps.outer[j];      // east neighbor p_{j+1}

        sub.center = f * pj;
        Point2 apex = (1 - nu) * sub.center;
        const Point2& p1 = ps.outer[0];
        const Point2& pN = ps.outer[N - 1];
        // unit radial direction (p_j lies on the circle, so p_j / R is unit)
        Point2 u{pj.x / ps.radius, pj.y / ps.radius};
        // arm direction: the chord to the neighbor with its radial dip scaled
        // by (1 - lambda); strictly between the chord and the local tangent.
        // The length is cut until the tip fits inside both host triangles.
        auto arm_tip = [&](const Point2& nb) {
            Point2 chord = nb - sub.center;
            Rational dip = chord.x * u.x + chord.y * u.y;
            UPS_CHECK(dip < 0, "neighbor chord does not dip below the tangent");
            Point2 dir = chord - (lambda * dip) * u;
            Rational b = beta;
            for (int it = 0; it < 200; ++it, b /= 2) {
                Point2 tip = sub.center + b * dir;
                if (point_in_triangle(tip, pw, pj, pe) && point_in_triangle(tip, p1, pj, pN))
                    return tip;
            }
            throw check_error("arm does not fit inside the host triangles");
        };
        Point2 tip_plus = arm_tip(pe);
        Point2 tip_minus = arm_tip(pw);

        auto fill = [&](std::vector<Point2>& seg, const Point2& tip) {
            seg.resize(cap);
            for (long z = 1; z <= cap; ++z) {
                Rational t(z, cap);
                seg[z - 1] = sub.center + t * (tip - sub.center);
            }
        };
        fill(sub.seg_N, apex);
        fill(sub.seg_plus, tip_plus);
        fill(sub.seg_minus, tip_minus);

        if (with_petals) {
            // petal triangle apex for point z of a segment; constant anchors
            // (nullptr) mean the apex is the anchor point itself
            // A family's apexes must land on the side of its reference
            // anchor (p_j for fixed apexes, p_1 / p_N for the arc sides).
            auto build_family = [&](const std::vector<Point2>& seg, std::vector<PetalPair>& out,
                                    const Point2* lA1, const Point2* lA2, const Point2& lRef,
                                    const Point2* rA1, const Point2* rA2, const Point2& rRef) {
                out.resize(cap);
                auto apex_of = [&](long z, const Point2* a1, const Point2* a2) -> Point2 {
                    const Point2& prev = z == 1 ? sub.center : seg[z - 2];
                    const Point2& cur = seg[z - 1];
                    if (a2 == nullptr) return *a1;  // fixed apex
                    auto q = line_intersection(prev, *a1, cur, *a2);
                    UPS_CHECK(q.has_value(), "petal apex lines parallel");
                    return *q;
                };
                // one offset scale per side, halved until every petal is
                // strictly inside its triangle
                int side_sign[2] = {0, 0};
                for (int side = 0; side < 2; ++side) {
                    const Point2* a1 = side == 0 ? lA1 : rA1;
                    const Point2* a2 = side == 0 ? lA2 : rA2;
                    const Point2& tip = seg[cap - 1];
                    int expected = orient(sub.center, tip, side == 0 ? lRef : rRef);
                    UPS_CHECK(expected != 0, "petal reference anchor on the segment line");
                    std::vector<Point2> apexes(cap);
                    bool found = false;
                    for (int attempt = 0; attempt < 2 && !found; ++attempt) {
                        if (attempt == 1) {
                            if (a2 == nullptr) break;
                            std::swap(a1, a2);
                        }
                        found = true;
                        for (long z = 1; z <= cap && found; ++z) {
                            apexes[z - 1] = apex_of(z, a1, a2);
                            if (orient(sub.center, tip, apexes[z - 1]) != expected) found = false;
                        }
                    }
                    UPS_CHECK(found, "petal apexes do not land on the expected side");
                    side_sign[side] = expected;
                    UPS_CHECK(side == 0 || side_sign[0] != side_sign[1],
                              "petal sides collapse onto one side of the segment");
                    Point2 dir{tip.y - sub.center.y, -(tip.x - sub.center.x)};  // rot90
                    // orient the offset toward the apex side of the segment line
                    if (orient(sub.center, tip, sub.center + dir) !=
                        orient(sub.center, tip, apexes[0]))
                        dir = Point2{-dir.x, -dir.y};
                    Rational c(1, 16);
                    bool ok = false;
                    for (int iter = 0; iter < 80 && !ok; ++iter, c /= 2) {
                        ok = true;
                        for (long z = 1; z <= cap && ok; ++z) {
                            const Point2& prev = z == 1 ? sub.center : seg[z - 2];
                            const Point2& cur = seg[z - 1];
                            Point2 m = Rational(1, 2) * (prev + cur);
                            Rational w(4 * z * (cap + 1 - z), (cap + 1) * (cap + 1));
                            Point2 pet = m + (c * w) * dir;
                            if (!point_in_triangle(pet, prev, cur, apexes[z - 1])) ok = false;
                        }
                        if (ok) {
                            for (long z = 1; z <= cap; ++z) {
                                const Point2& prev = z == 1 ? sub.center : seg[z - 2];
                                const Point2& cur = seg[z - 1];
                                Point2 m = Rational(1, 2) * (prev + cur);
                                Rational w(4 * z * (cap + 1 - z), (cap + 1) * (cap + 1));
                                Point2 pet = m + (c * w) * dir;
                                if (side == 0) out[z - 1].l = pet;
                                else out[z - 1].r = pet;
                            }
                        }
                    }
                    UPS_CHECK(ok, "no petal offset fits inside the triangles");
                }
            };
            // seg_plus: l toward p_j, r toward (p_{j+1}, p_N)
            build_family(sub.seg_plus, sub.petals_plus, &pj, nullptr, pj, &pe, &pN, pN);
            // seg_minus: l toward (p_{j-1}, p_1), r toward p_j
            build_family(sub.seg_minus, sub.petals_minus, &pw, &p1, p1, &pj, nullptr, pj);
            // seg_N: l toward (p_{j-1}, p_1), r toward (p_{j+1}, p_N)
            build_family(sub.seg_N, sub.petals_N, &pw, &p1, p1, &pe, &pN, pN);
        }

        ps.subsets.emplace(j, std::move(sub));
    }

    ps.validate();
    return ps;
}

void UniversalPointSet::validate() const {
    // pairwise distinct
    {
        auto pts = all_points();
        std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
            return a.x != b.x ? a.x < b.x : a.y < b.y;
        });
        for (size_t i = 1; i < pts.size(); ++i)
            UPS_CHECK(!(pts[i - 1] == pts[i]),
                      "coincident points in the set at (" + rational_to_string(pts[i].x) + ", " +
                          rational_to_string(pts[i].y) + ")");
    }
    for (const auto& [j, sub] : subsets) {
        const Point2& pw = outer[j - 2];
        const Point2& pj = outer[j - 1];
        const Point2& pe = outer[j];
        const Point2& p1 = outer[0];
        const Point2& pN = outer[N - 1];
        auto inside = [&](const Point2& p) {
            UPS_CHECK(point_in_triangle(p, pw, pj, pe),
                      "subset point escapes its triangle (j=" + std::to_string(j) + ")");
            UPS_CHECK(point_in_triangle(p, p1, pj, pN),
                      "subset point escapes the end triangle (j=" + std::to_string(j) + ")");
        };
        inside(sub.center);
        for (int sigma = 0; sigma < 3; ++sigma) {
            for (const auto& p : sub.seg(sigma)) inside(p);
            for (const auto& pp : sub.petals(sigma)) {
                inside(pp.l);
                inside(pp.r);
            }
        }
        // angular wedge disjointness against the east neighbor subset
        if (subsets.count(j + 1)) {
            Point2 bis = pj + pe;  // direction of the separating line through O
            Point2 o{0, 0};
            int west = orient(o, bis, pj);
            int east = orient(o, bis, pe);
            UPS_CHECK(west != 0 && east != 0 && west != east, "degenerate wedge bisector");
            const SubPointSet& nxt = subsets.at(j + 1);
            auto check_side = [&](const SubPointSet& sp, int side) {
                auto chk = [&](const Point2& p) {
                    UPS_CHECK(orient(o, bis, p) == side, "subsets overlap across the bisector");
                };
                chk(sp.center);
                for (int sigma = 0; sigma < 3; ++sigma) {
                    for (const auto& p : sp.seg(sigma)) chk(p);
                    for (const auto& pp : sp.petals(sigma)) {
                        chk(pp.l);
                        chk(pp.r);
                    }
                }
            };
            check_side(sub, west);
            check_side(nxt, east);
        }
    }
}

namespace {

// every point of {p_l} union S_l (segments and center, petals excluded)
std::vector<const Point2*> viewer_points(const UniversalPointSet& ps, long l) {
    std::vector<const Point2*> v;
    v.push_back(&ps.outer[l - 1]);
    auto it = ps.subsets.find(l);
    if (it != ps.subsets.end()) {
        const SubPointSet& s = it->second;
        v.push_back(&s.center);
        for (int sigma = 0; sigma < 3; ++sigma)
            for (const auto& p : s.seg(sigma)) v.push_back(&p);
    }
    return v;
}

// the ordered direction list for items (B) (side=-1, lower indices look at
// seg_minus) and (C) (side=+1, seg_plus): apex, seg_N ascending toward the
// center, center, side segment outward, p_j
std::vector<const Point2*> order_list(const SubPointSet& s, const Point2& pj, int side) {
    std::vector<const Point2*> v;
    const auto& segN = s.seg_N;
    for (long z = (long)segN.size(); z >= 1; --z) v.push_back(&segN[z - 1]);
    v.push_back(&s.center);
    const auto& arm = side < 0 ? s.seg_minus : s.seg_plus;
    for (const auto& p : arm) v.push_back(&p);
    v.push_back(&pj);
    return v;
}

struct VisFail {};

}  // namespace

VisibilityReport check_visibility(const UniversalPointSet& ps, bool exhaustive,
                                  unsigned long long samples, std::uint64_t seed) {
    VisibilityReport rep;
    const long N = ps.N;
    const Point2 O{0, 0};

    auto fail = [&](const std::string& what) {
        rep.ok = false;
        if (rep.violation.empty()) rep.violation = what;
    };

    // item (A): fan order around p_j
    auto check_A = [&](long j) {
        const SubPointSet& s = ps.subsets.at(j);
        const Point2& pj = ps.outer[j - 1];
        std::vector<const Point2*> L;
        for (long z = (long)s.seg_minus.size(); z >= 1; --z) L.push_back(&s.seg_minus[z - 1]);
        L.push_back(&s.center);
        for (const auto& p : s.seg_plus) L.push_back(&p);
        for (size_t i = 0; i + 1 < L.size(); ++i) {
            ++rep.checked;
            if (orient(pj, *L[i], *L[i + 1]) != 1) {
                fail("item A order around p_" + std::to_string(j));
                return;
            }
        }
    };

    // items (B)/(C) first part: ordered sweep around a viewer
    auto check_order = [&](long l, long j) {
        int side = l < j ? -1 : +1;
        int expected = l < j ? 1 : -1;
        const SubPointSet& s = ps.subsets.at(j);
        auto L = order_list(s, ps.outer[j - 1], side);
        for (const Point2* x : viewer_points(ps, l)) {
            for (size_t i = 0; i + 1 < L.size(); ++i) {
                ++rep.checked;
                if (orient(*x, *L[i], *L[i + 1]) != expected) {
                    fail("item " + std::string(l < j ? "B" : "C") + " order: viewer at " +
                         std::to_string(l) + ", target S_" + std::to_string(j));
                    return;
                }
            }
        }
    };

    // items (B)/(C) second part: separation of the in-between sets
    auto check_sep_one = [&](const Point2& x, const Point2& y, const Point2& z, long l, long j) {
        ++rep.checked;
        int zo = orient(x, y, z);
        int oo = orient(x, y, O);
        if (zo == 0 || oo == 0 || zo == oo) {
            fail("separation: viewer " + std::to_string(l) + " target S_" + std::to_string(j));
            return false;
        }
        return true;
    };
    auto targets_of = [&](long j) {
        std::vector<const Point2*> v = viewer_points(ps, j);
        return v;  // {p_j} union S_j
    };

    if (exhaustive) {
        for (long j = 2; j <= N - 1 && rep.ok; ++j) check_A(j);
        for (long l = 1; l <= N && rep.ok; ++l)
            for (long j = 2; j <= N - 1 && rep.ok; ++j)
                if (l != j) check_order(l, j);
        for (long l = 1; l <= N && rep.ok; ++l) {
            for (long j = 2; j <= N - 1 && rep.ok; ++j) {
                if (l == j) continue;
                long qlo = std::min(l, j) + 1, qhi = std::max(l, j) - 1;
                if (qlo > qhi) continue;
                auto viewers = viewer_points(ps, l);
                auto ys = targets_of(j);
                for (long q = qlo; q <= qhi && rep.ok; ++q) {
                    auto zs = targets_of(q);
                    for (const Point2* x : viewers) {
                        for (const Point2* y : ys) {
                            for (const Point2* z : zs)
                                if (!check_sep_one(*x, *y, *z, l, j)) return rep;
                            if (!rep.ok) return rep;
                        }
                    }
                }
            }
        }
        return rep;
    }

    std::mt19937_64 rng(seed);
    auto rnd = [&](long lo, long hi) { return lo + (long)(rng() % (unsigned long long)(hi - lo + 1)); };
    for (unsigned long long it = 0; it < samples && rep.ok; ++it) {
        int what = (int)(rng() % 3);
        if (what == 0) {
            check_A(rnd(2, N - 1));
        } else if (what == 1) {
            long j = rnd(2, N - 1);
            long l = j;
            while (l == j) l = rnd(1, N);
            auto viewers = viewer_points(ps, l);
            const Point2* x = viewers[rng() % viewers.size()];
            auto L = order_list(ps.subsets.at(j), ps.outer[j - 1], l < j ? -1 : +1);
            size_t i = rng() % (L.size() - 1);
            ++rep.checked;
            if (orient(*x, *L[i], *L[i + 1]) != (l < j ? 1 : -1))
                fail("sampled order check: viewer " + std::to_string(l) + " target S_" +
                     std::to_string(j));
        } else {
            long j = rnd(2, N - 1);
            long l = j;
            while (std::labs(l - j) < 2) l = rnd(1, N);
            long qlo = std::min(l, j) + 1, qhi = std::max(l, j) - 1;
            long q = rnd(qlo, qhi);
            auto viewers = viewer_points(ps, l);
            auto ys = targets_of(j);
            auto zs = targets_of(q);
            check_sep_one(*viewers[rng() % viewers.size()], *ys[rng() % ys.size()],
                          *zs[rng() % zs.size()], l, j);
        }
    }
    return rep;
}

bool check_convexity(const UniversalPointSet& ps, long j_lo, long j_hi) {
    UPS_CHECK(2 <= j_lo && j_lo < j_hi && j_hi <= ps.N - 1, "bad convexity range");
    for (int lo_variant = 0; lo_variant < 2; ++lo_variant) {
        for (int hi_variant = 0; hi_variant < 2; ++hi_variant) {
            std::vector<Point2> chain;
            for (long j = j_lo; j <= j_hi; ++j) {
                const SubPointSet& s = ps.subsets.at(j);
                const auto& west = (j == j_lo && lo_variant) ? s.seg_N : s.seg_minus;
                for (long z = (long)west.size(); z >= 1; --z) chain.push_back(west[z - 1]);
                chain.push_back(s.center);
                const auto& east = (j == j_hi && hi_variant) ? s.seg_N : s.seg_plus;
                for (const auto& p : east) chain.push_back(p);
            }
            if (!is_weakly_convex_position(chain)) return false;
        }
    }
    return true;
}

}  // namespace ups
