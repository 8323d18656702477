#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cyclo/coeffs.hpp"

using namespace cyclo;

namespace {

// Test-side reference: dense polynomial long division of
// (x^pqr - 1)(x^p - 1)(x^q - 1)(x^r - 1) by (x - 1)(x^qr - 1)(x^rp - 1)(x^pq - 1),
// asserting a zero remainder. Shares no code with the library paths.
std::vector<long long> poly_mul_binomial(const std::vector<long long>& a, std::int64_t e) {
    // multiply by (x^e - 1)
    std::vector<long long> out(a.size() + static_cast<std::size_t>(e), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i + static_cast<std::size_t>(e)] += a[i];
        out[i] -= a[i];
    }
    return out;
}

std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
    REQUIRE(den.back() == 1);
    REQUIRE(num.size() >= den.size());
    std::vector<long long> quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const long long c = num[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (long long rem : num) REQUIRE(rem == 0);
    return quot;
}

std::vector<long long> longdiv_reference(const TernaryTriple& t) {
    std::vector<long long> num{1};
    for (std::int64_t e : {t.product(), t.p, t.q, t.r}) num = poly_mul_binomial(num, e);
    std::vector<long long> den{1};
    for (std::int64_t e : {std::int64_t{1}, t.q * t.r, t.r * t.p, t.p * t.q})
        den = poly_mul_binomial(den, e);
    return poly_div_exact(num, den);
}

void check_matches_reference(const TernaryTriple& t) {
    const auto expected = longdiv_reference(t);
    const auto got = oracle_coefficients(t);
    REQUIRE(got.coeffs.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) REQUIRE(got.coeffs[i] == expected[i]);
}

} // namespace

TEST_CASE("series oracle equals long division reference") {
    check_matches_reference(TernaryTriple(3, 5, 7));
    check_matches_reference(TernaryTriple(3, 5, 11));
    check_matches_reference(TernaryTriple(5, 7, 11));
    check_matches_reference(TernaryTriple(7, 11, 13));
}

TEST_CASE("known coefficients for (3,5,7)") {
    const auto v = oracle_coefficients(TernaryTriple(3, 5, 7));
    REQUIRE(v.degree() == 48);
    const std::vector<std::int32_t> head{1, 1, 1, 0, 0, -1, -1, -2, -1, -1};
    for (std::size_t i = 0; i < head.size(); ++i) CHECK(v.coeffs[i] == head[i]);
    CHECK(v.coeffs[48] == 1);
    CHECK(v.coeffs[7] == -2);

    std::int64_t sum = 0;
    for (auto c : v.coeffs) sum += c;
    CHECK(sum == 1);
    for (std::int64_t n = 0; n <= 48; ++n) CHECK(v.at_or_zero(n) == v.at_or_zero(48 - n));
}

TEST_CASE("at_or_zero pads with zeros") {
    const auto v = oracle_coefficients(TernaryTriple(3, 5, 7));
    CHECK(v.at_or_zero(-1) == 0);
    CHECK(v.at_or_zero(49) == 0);
    CHECK(v.at_or_zero(1000) == 0);
}

TEST_CASE("coefficient_at equals the oracle everywhere on (3,5,7)") {
    const auto ctx = make_context(TernaryTriple(3, 5, 7));
    const auto v = oracle_coefficients(ctx.triple);
    CHECK(coefficient_at(ctx, 0) == 1);
    CHECK(coefficient_at(ctx, 7) == -2);
    for (std::int64_t n = 0; n <= v.degree(); ++n) CHECK(coefficient_at(ctx, n) == v.coeffs[n]);
    CHECK_THROWS_AS(coefficient_at(ctx, -1), IndexOutOfRange);
    CHECK_THROWS_AS(coefficient_at(ctx, 49), IndexOutOfRange);
}

TEST_CASE("three coefficient forms agree") {
    const auto ctx = make_context(TernaryTriple(3, 5, 7));
    auto at7 = coefficient_at_variants(ctx, 7);
    CHECK(at7.via_n0 == -2);
    CHECK(at7.via_n2 == -2);
    CHECK(at7.via_half_n1 == -2);
    auto at0 = coefficient_at_variants(ctx, 0);
    CHECK(at0.via_n0 == 1);
    CHECK(at0.via_n2 == 1);
    CHECK(at0.via_half_n1 == 1);

    const auto big = make_context(TernaryTriple(5, 7, 11));
    const auto v = oracle_coefficients(big.triple);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> pick(0, v.degree());
    for (int i = 0; i < 50; ++i) {
        const std::int64_t n = pick(rng);
        const auto var = coefficient_at_variants(big, n);
        CHECK(var.via_n0 == v.coeffs[static_cast<std::size_t>(n)]);
        CHECK(var.via_n2 == var.via_n0);
        CHECK(var.via_half_n1 == var.via_n0);
    }
}

TEST_CASE("sliding window equals the oracle") {
    for (const auto& t : {TernaryTriple(3, 5, 7), TernaryTriple(3, 5, 11),
                          TernaryTriple(5, 7, 11), TernaryTriple(3, 11, 13)}) {
        const auto ctx = make_context(t);
        const auto fast = all_coefficients(ctx);
        const auto slow = oracle_coefficients(t);
        REQUIRE(fast.coeffs.size() == slow.coeffs.size());
        CHECK(fast.coeffs == slow.coeffs);
    }
}

TEST_CASE("extrema for (3,5,7)") {
    const auto ex = extrema(oracle_coefficients(TernaryTriple(3, 5, 7)));
    CHECK(ex.a_plus == 1);
    CHECK(ex.a_minus == -2);
    CHECK(ex.height == 2);
    CHECK(ex.max_jump == 1);
}

TEST_CASE("jump decomposition matches coefficient differences") {
    const auto ctx = make_context(TernaryTriple(3, 5, 7));
    const auto v = oracle_coefficients(ctx.triple);

    const auto at7 = jump_decomposition(ctx, 7);
    CHECK(at7.delta() == -1); // a(7) - a(6) = -2 - (-1)

    for (std::int64_t n = 0; n <= v.degree() + 1; ++n) {
        const auto jd = jump_decomposition(ctx, n);
        const int expected = v.at_or_zero(n) - v.at_or_zero(n - 1);
        CHECK(jd.delta() == expected);
        if (expected == 0) CHECK(jd.n_plus == jd.n_minus);
        CHECK_FALSE((jd.n_plus == 0 && jd.n_minus == 4));
        CHECK_FALSE((jd.n_plus == 4 && jd.n_minus == 0));
    }
    CHECK_THROWS_AS(jump_decomposition(ctx, -1), IndexOutOfRange);
    CHECK_THROWS_AS(jump_decomposition(ctx, v.degree() + 2), IndexOutOfRange);
}

TEST_CASE("vector invariants hold across a small sweep") {
    for (const auto& t : enumerate_triples(20000)) {
        const auto ctx = make_context(t);
        const auto v = all_coefficients(ctx);
        const auto ex = extrema(v);
        CHECK(v.coeffs.front() == 1);
        CHECK(v.coeffs.back() == 1);
        CHECK(ex.height <= t.p - 1);
        CHECK(ex.max_jump <= 1);
        std::int64_t sum = 0;
        for (auto c : v.coeffs) sum += c;
        CHECK(sum == 1);
        bool palindrome = true;
        for (std::int64_t n = 0; 2 * n <= v.degree(); ++n)
            palindrome = palindrome && v.at_or_zero(n) == v.at_or_zero(v.degree() - n);
        CHECK(palindrome);
    }
}

TEST_CASE("degree cap is enforced") {
    // (503, 1009, 1013): product fits the triple cap but the degree
    // exceeds the full-vector cap.
    const TernaryTriple big(503, 1009, 1013);
    CHECK(big.degree() > kDegreeCap);
    CHECK_THROWS_AS(oracle_coefficients(big), DegreeTooLarge);
    CHECK_THROWS_AS(all_coefficients(make_context(big)), DegreeTooLarge);
}
