#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ups/json_io.hpp"
#include "ups/pointset.hpp"

#include <cmath>
#include <random>

using namespace ups;

TEST_CASE("xi ruler sequence pinned") {
    auto xs = xi_sequence(8);
    CHECK(xs == std::vector<long>{1, 2, 1, 4, 1, 2, 1, 8});
}

TEST_CASE("xi greedy pinned examples") {
    auto xs = xi_sequence(8);
    CHECK(xi_greedy_assign({3, 1}, xs) == std::vector<long>{4, 5});
    CHECK(xi_greedy_assign({1, 1, 1, 1, 1, 1, 1, 1}, xs) ==
          std::vector<long>{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("xi greedy never fails for compositions within 2n slots") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 1000; ++it) {
        long n = 1 + (long)(rng() % (1 << 14));
        std::vector<long> weights;
        long left = n;
        while (left > 0) {
            long w = 1 + (long)(rng() % left);
            weights.push_back(w);
            left -= w;
        }
        auto xs = xi_sequence(2 * n);
        auto slots = xi_greedy_assign(weights, xs);
        REQUIRE(!slots.empty());
        CHECK(slots.back() <= 2 * n);
        for (size_t i = 0; i < weights.size(); ++i)
            CHECK(weights[i] <= xs[slots[i] - 1]);
        for (size_t i = 1; i < slots.size(); ++i) CHECK(slots[i] > slots[i - 1]);
    }
}

TEST_CASE("xi prefix sums are O(m log m)") {
    auto xs = xi_sequence(1 << 15);
    long double worst = 0;
    long long sum = 0;
    for (long m = 1; m <= (1 << 15); ++m) {
        sum += xs[m - 1];
        long double bound = (long double)m * std::log2((long double)m + 1);
        worst = std::max(worst, (long double)sum / bound);
    }
    CHECK(worst < 2.0L);  // reported constant C
}

TEST_CASE("sqrt-mode counting formulas for square n") {
    for (long n : {4L, 9L, 16L, 25L}) {
        auto ps = build_point_set(n, PointSetMode::sqrt_mode, false);
        CHECK(ps.subset_point_count() == sqrt_mode_subset_formula(n, false));
        auto psp = build_point_set(n, PointSetMode::sqrt_mode, true);
        CHECK(psp.subset_point_count() + psp.petal_point_count() ==
              sqrt_mode_subset_formula(n, true));
        CHECK(point_count_formula(n, PointSetMode::sqrt_mode, true) ==
              psp.total_point_count());
    }
}

TEST_CASE("n=4 structure pinned") {
    auto ps = build_point_set(4, PointSetMode::sqrt_mode, true);
    CHECK(ps.N == 6);
    CHECK(ps.dense_point[3]);
    CHECK(ps.dense_point[6]);
    CHECK(ps.subsets.size() == 4);  // j = 2..5, one dense (j=3)
    CHECK(ps.subsets.at(3).capacity == 4);
    CHECK(ps.subsets.at(2).capacity == 2);
    // petals + sub-point-sets: 1*37 + 3*19 = 94
    CHECK(ps.subset_point_count() + ps.petal_point_count() == 94);
}

TEST_CASE("small point sets pass the exhaustive visibility check") {
    for (long n : {3L, 4L, 5L, 6L}) {
        auto ps = build_point_set(n, PointSetMode::sqrt_mode, true);
        auto rep = check_visibility(ps, true);
        CAPTURE(n);
        CAPTURE(rep.violation);
        CHECK(rep.ok);
    }
}

TEST_CASE("small point sets pass convexity for all ranges") {
    for (long n : {3L, 4L, 5L, 6L}) {
        auto ps = build_point_set(n, PointSetMode::sqrt_mode, false);
        for (long lo = 2; lo + 1 <= ps.N - 1; ++lo)
            for (long hi = lo + 1; hi <= ps.N - 1; ++hi) {
                CAPTURE(n);
                CAPTURE(lo);
                CAPTURE(hi);
                CHECK(check_convexity(ps, lo, hi));
            }
    }
}

TEST_CASE("xi mode builds and checks out at small n") {
    auto ps = build_point_set(5, PointSetMode::xi_mode, true);
    CHECK(ps.N == 12);
    auto rep = check_visibility(ps, true);
    CAPTURE(rep.violation);
    CHECK(rep.ok);
    CHECK(check_convexity(ps, 2, ps.N - 1));
}

TEST_CASE("a displaced point is detected by the visibility check") {
    auto ps = build_point_set(4, PointSetMode::sqrt_mode, false);
    // reflect one arm point across the center: breaks item (A)
    auto& sub = ps.subsets.at(3);
    Point2& p = sub.seg_plus[0];
    const Point2& c = sub.center;
    p = Point2{2 * c.x - p.x, 2 * c.y - p.y};
    auto rep = check_visibility(ps, true);
    CHECK_FALSE(rep.ok);
}

TEST_CASE("a lifted arm breaks convexity") {
    auto ps = build_point_set(4, PointSetMode::sqrt_mode, false);
    auto& sub = ps.subsets.at(3);
    // push the plus tip radially far outside the sliver
    Point2& tip = sub.seg_plus.back();
    tip = Point2{tip.x * 2, tip.y * 2};
    bool any_fail = false;
    for (long lo = 2; lo + 1 <= ps.N - 1 && !any_fail; ++lo)
        for (long hi = lo + 1; hi <= ps.N - 1 && !any_fail; ++hi)
            if (!check_convexity(ps, lo, hi)) any_fail = true;
    CHECK(any_fail);
}

TEST_CASE("validate rejects coincident points") {
    auto ps = build_point_set(4, PointSetMode::sqrt_mode, false);
    ps.subsets.at(3).seg_plus[0] = ps.subsets.at(3).seg_minus[0];
    CHECK_THROWS_AS(ps.validate(), check_error);
}

TEST_CASE("point set json round trip") {
    auto ps = build_point_set(4, PointSetMode::sqrt_mode, true);
    auto ps2 = pointset_from_json(pointset_to_json(ps));
    CHECK(ps2.N == ps.N);
    CHECK(ps2.total_point_count() == ps.total_point_count());
    CHECK(ps2.subsets.at(3).seg_plus == ps.subsets.at(3).seg_plus);
    CHECK(ps2.point(PointRef{3, SegKind::petalL, 5}) == ps.point(PointRef{3, SegKind::petalL, 5}));
}

TEST_CASE("build rejects n < 3") {
    CHECK_THROWS_AS(build_point_set(2, PointSetMode::sqrt_mode, false), input_error);
}
