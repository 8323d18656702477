#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyclo/fkseq.hpp"

using namespace cyclo;

TEST_CASE("context parameters for (3,5,7)") {
    const auto ctx = make_context(TernaryTriple(3, 5, 7));
    CHECK(ctx.q_inv_p == 2);
    CHECK(ctx.r_inv_p == 1);
    CHECK(ctx.p_inv_q == 2);
    CHECK(ctx.p_inv_r == 5);
    CHECK(ctx.qr_inv_p == 2);
    CHECK(ctx.rp_inv_q == 1);
    CHECK(ctx.pq_inv_r == 1);
    CHECK(ctx.inv_max == 2);
    CHECK(ctx.inv_min == 1);
    CHECK(ctx.alpha == 1);
    CHECK(ctx.beta == 2);
    CHECK(ctx.beta_star == 1);
    CHECK(ctx.window_lo == -71);
    CHECK(ctx.window_hi == 105);
}

TEST_CASE("context parameters for (5,7,11)") {
    const auto ctx = make_context(TernaryTriple(5, 7, 11));
    CHECK(ctx.q_inv_p == 3);
    CHECK(ctx.r_inv_p == 1);
    CHECK(ctx.inv_max == 3);
    CHECK(ctx.inv_min == 1);
    CHECK(ctx.alpha == 1);
    CHECK(ctx.beta == 3);
    CHECK(ctx.beta_star == 2);
}

TEST_CASE("context is symmetric in the order of q and r") {
    const auto a = make_context(TernaryTriple(3, 5, 7));
    const auto b = make_context(TernaryTriple(3, 7, 5));
    CHECK(a.triple == b.triple);
    CHECK(a.alpha == b.alpha);
    CHECK(a.beta == b.beta);
    CHECK(a.beta_star == b.beta_star);
}

TEST_CASE("context invariants over a sweep") {
    for (const auto& t : enumerate_triples(100000)) {
        const auto ctx = make_context(t);
        CHECK(mul_mod(mul_mod(ctx.alpha, ctx.beta, t.p), euclid_mod(t.q * t.r, t.p), t.p) == 1);
        CHECK(ctx.beta > 0);
        CHECK(ctx.beta < t.p);
        CHECK(ctx.beta_star == std::min(ctx.beta, t.p - ctx.beta));
        CHECK(ctx.alpha >= 1);
        CHECK(ctx.alpha <= ctx.beta_star);
        CHECK(2 * ctx.beta_star <= t.p - 1);
        if (ctx.inv_max + ctx.inv_min >= t.p) {
            CHECK(ctx.alpha == t.p - ctx.inv_max);
            CHECK(ctx.beta == t.p - ctx.inv_min);
        } else {
            CHECK(ctx.alpha == ctx.inv_min);
            CHECK(ctx.beta == ctx.inv_max);
        }
    }
}

TEST_CASE("fk point values for (3,5,7)") {
    const auto ctx = make_context(TernaryTriple(3, 5, 7));
    CHECK(fk(ctx, 0) == 0);
    CHECK(fk(ctx, 1) == 1);
    CHECK(fk(ctx, 4) == 2);
    CHECK(fk(ctx, 104) == 1);
    CHECK(fk(ctx, -70) == 1); // a=1, b=0, c=0: (35 + 70)/105

    CHECK_THROWS_AS(fk(ctx, 105), OutOfWindow);
    CHECK_THROWS_AS(fk(ctx, -71), OutOfWindow);
    CHECK_THROWS_AS(fk(ctx, 1000000), OutOfWindow);
}

TEST_CASE("fk stays in {0,1,2} across the whole window") {
    for (const auto& t : {TernaryTriple(3, 5, 7), TernaryTriple(5, 7, 11)}) {
        const auto ctx = make_context(t);
        for (std::int64_t k = ctx.window_lo + 1; k < ctx.window_hi; ++k) {
            const FkValue f = fk(ctx, k);
            CHECK(f >= 0);
            CHECK(f <= 2);
        }
    }
}

TEST_CASE("fk_range equals pointwise evaluation") {
    const auto ctx = make_context(TernaryTriple(3, 5, 7));
    CHECK(fk_range(ctx, 0, 4) == std::vector<FkValue>{0, 1, 1, 1, 2});
    CHECK(fk_range(ctx, 0, 0) == std::vector<FkValue>{0});
    CHECK(fk_range(ctx, 5, 4).empty());
    CHECK_THROWS_AS(fk_range(ctx, -100, 4), OutOfWindow);

    std::mt19937_64 rng(3);
    for (const auto& t : {TernaryTriple(3, 5, 7), TernaryTriple(5, 7, 11), TernaryTriple(3, 11, 13)}) {
        const auto c = make_context(t);
        std::uniform_int_distribution<std::int64_t> pick(c.window_lo + 1, c.window_hi - 1);
        for (int i = 0; i < 20; ++i) {
            std::int64_t lo = pick(rng), hi = pick(rng);
            if (lo > hi) std::swap(lo, hi);
            hi = std::min(hi, lo + 500);
            const auto range = fk_range(c, lo, hi);
            REQUIRE(range.size() == static_cast<std::size_t>(hi - lo + 1));
            for (std::int64_t k = lo; k <= hi; ++k)
                CHECK(range[static_cast<std::size_t>(k - lo)] == fk(c, k));
        }
    }
}

TEST_CASE("shift difference case formulas match direct differences") {
    const auto ctx = make_context(TernaryTriple(3, 5, 7));
    CHECK(fk_diff_q(ctx, 1) == 0);
    CHECK(fk_diff_q(ctx, 0) == -1); // a_0 = c_0 = 0
    CHECK(fk(ctx, 1) - fk(ctx, -4) == 0);
    CHECK(fk(ctx, 0) - fk(ctx, -5) == -1);

    for (const auto& t : {TernaryTriple(3, 5, 7), TernaryTriple(5, 7, 11)}) {
        const auto c = make_context(t);
        for (std::int64_t k = c.window_lo + 1 + t.q; k < c.window_hi; ++k)
            CHECK(fk_diff_q(c, k) == fk(c, k) - fk(c, k - t.q));
        for (std::int64_t k = c.window_lo + 1 + t.r; k < c.window_hi; ++k)
            CHECK(fk_diff_r(c, k) == fk(c, k) - fk(c, k - t.r));
    }
}

TEST_CASE("double difference matches the alternating sum and only sees a_k") {
    const auto ctx = make_context(TernaryTriple(3, 5, 7));
    // M = 2, m = 1, M+m = p: the value is a_k - 1 here
    CHECK(fk_double_diff(ctx, 0) == -1);  // a_0 = 0
    CHECK(fk_double_diff(ctx, 2) == 0);   // a_2 = 1
    CHECK(fk_double_diff(ctx, 1) == 1);   // a_1 = 2 = M

    for (const auto& t : {TernaryTriple(3, 5, 7), TernaryTriple(5, 7, 11)}) {
        const auto c = make_context(t);
        std::vector<int> seen(static_cast<std::size_t>(t.p), 9);
        for (std::int64_t k = c.window_lo + 1 + t.q + t.r; k < c.window_hi; ++k) {
            const int direct =
                fk(c, k) - fk(c, k - t.q) - fk(c, k - t.r) + fk(c, k - t.q - t.r);
            const int value = fk_double_diff(c, k);
            CHECK(value == direct);
            CHECK(value >= -1);
            CHECK(value <= 1);
            const auto a = mul_mod(euclid_mod(k, t.p), c.qr_inv_p, t.p);
            auto& slot = seen[static_cast<std::size_t>(a)];
            if (slot == 9) slot = value;
            else CHECK(slot == value);
        }
    }
}

TEST_CASE("fk support bounds when F is 0 or 2") {
    const auto ctx = make_context(TernaryTriple(3, 5, 7));
    const TernaryTriple& t = ctx.triple;
    for (std::int64_t k = ctx.window_lo + 1; k < ctx.window_hi; ++k) {
        const FkValue f = fk(ctx, k);
        const auto a = mul_mod(euclid_mod(k, t.p), ctx.qr_inv_p, t.p);
        if (f == 0) CHECK(a <= floor_div(k, t.q * t.r));
        if (f == 2) CHECK(a >= -floor_div(-(k + t.p * t.q + t.r * t.p), t.q * t.r));
    }
}

TEST_CASE("octuple identity") {
    const auto ctx = make_context(TernaryTriple(3, 5, 7));
    CHECK(check_octuple_identity(ctx, 30));
    const std::int64_t shift = 3 + 5 + 7;
    for (std::int64_t k = ctx.window_lo + 1 + shift; k < ctx.window_hi; ++k)
        CHECK(check_octuple_identity(ctx, k));

    const auto big = make_context(TernaryTriple(5, 7, 11));
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> pick(big.window_lo + 1 + 23, big.window_hi - 1);
    for (int i = 0; i < 1000; ++i) CHECK(check_octuple_identity(big, pick(rng)));

    CHECK_THROWS_AS(check_octuple_identity(ctx, ctx.window_lo + 1), OutOfWindow);
}

TEST_CASE("streams reproduce pointwise values across triples") {
    std::mt19937_64 rng(17);
    for (const auto& t : enumerate_triples(5000)) {
        const auto ctx = make_context(t);
        std::uniform_int_distribution<std::int64_t> pick(ctx.window_lo + 1, ctx.window_hi - 2);
        const std::int64_t start = pick(rng);
        const std::int64_t stop = std::min(start + 150, ctx.window_hi - 1);
        FkStream s(ctx, start);
        for (std::int64_t k = start; k <= stop; ++k) {
            CHECK(s.value() == fk(ctx, k));
            if (k < stop) s.advance();
        }
    }
}
