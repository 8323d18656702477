#include "cyclo/coeffs.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

namespace cyclo {

namespace {

void require_degree(const TernaryTriple& t) {
    if (t.degree() > kDegreeCap)
        throw DegreeTooLarge("degree " + std::to_string(t.degree()) + " exceeds cap " +
                             std::to_string(kDegreeCap));
}

void require_index(std::int64_t n, std::int64_t hi) {
    if (n < 0 || n > hi)
        throw IndexOutOfRange("coefficient index " + std::to_string(n) + " outside [0, " +
                              std::to_string(hi) + "]");
}

} // namespace

CoefficientVector oracle_coefficients(const TernaryTriple& t) {
    require_degree(t);
    const std::int64_t deg = t.degree();
    std::vector<std::int64_t> work(static_cast<std::size_t>(deg) + 1, 0);

    // (1-x^pqr)(1-x^p)(1-x^q)(1-x^r) truncated at deg; x^pqr never fits.
    const std::array<std::int64_t, 4> exps{t.p, t.q, t.r, t.product()};
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::int64_t e = 0;
        int sign = 1;
        for (unsigned bit = 0; bit < 4; ++bit)
            if (mask & (1u << bit)) {
                e += exps[bit];
                sign = -sign;
            }
        if (e <= deg) work[static_cast<std::size_t>(e)] += sign;
    }

    // Dividing a truncated series by (1-x^d) is a running sum at stride d.
    const std::array<std::int64_t, 4> strides{1, t.q * t.r, t.r * t.p, t.p * t.q};
    for (std::int64_t d : strides)
        for (std::int64_t i = d; i <= deg; ++i)
            work[static_cast<std::size_t>(i)] += work[static_cast<std::size_t>(i - d)];

    CoefficientVector out{t, {}};
    out.coeffs.resize(static_cast<std::size_t>(deg) + 1);
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (std::llabs(work[i]) >= t.p)
            throw InternalCheckFailure("oracle coefficient " + std::to_string(work[i]) +
                                       " at index " + std::to_string(i) + " breaks |a| <= p-1");
        out.coeffs[i] = static_cast<std::int32_t>(work[i]);
    }
    return out;
}

std::int64_t coefficient_at(const FkContext& ctx, std::int64_t n) {
    require_index(n, ctx.degree());
    const std::int64_t q = ctx.q(), r = ctx.r();
    std::int64_t sum = 0;
    for (std::int64_t k = n - ctx.p() + 1; k <= n; ++k) {
        sum += (fk(ctx, k) == 0) + (fk(ctx, k - q - r) == 0);
        sum -= (fk(ctx, k - q) == 0) + (fk(ctx, k - r) == 0);
    }
    return sum;
}

CoefficientVariants coefficient_at_variants(const FkContext& ctx, std::int64_t n) {
    require_index(n, ctx.degree());
    const std::int64_t q = ctx.q(), r = ctx.r();
    std::int64_t n0 = 0, n2 = 0, n1 = 0;
    for (std::int64_t k = n - ctx.p() + 1; k <= n; ++k) {
        const FkValue outer1 = fk(ctx, k), outer2 = fk(ctx, k - q - r);
        const FkValue inner1 = fk(ctx, k - q), inner2 = fk(ctx, k - r);
        n0 += (outer1 == 0) + (outer2 == 0) - (inner1 == 0) - (inner2 == 0);
        n2 += (outer1 == 2) + (outer2 == 2) - (inner1 == 2) - (inner2 == 2);
        n1 += (inner1 == 1) + (inner2 == 1) - (outer1 == 1) - (outer2 == 1);
    }
    if (n1 % 2 != 0)
        throw OddN1Sum("N1 sum " + std::to_string(n1) + " is odd at n=" + std::to_string(n));
    return {n0, n2, n1 / 2};
}

CoefficientVector all_coefficients(const FkContext& ctx) {
    require_degree(ctx.triple);
    const std::int64_t p = ctx.p(), q = ctx.q(), r = ctx.r();
    const std::int64_t deg = ctx.degree();

    const std::int64_t k0 = 1 - p;
    FkStream s0(ctx, k0);
    FkStream sq(ctx, k0 - q);
    FkStream sr(ctx, k0 - r);
    FkStream sqr(ctx, k0 - q - r);

    CoefficientVector out{ctx.triple, {}};
    out.coeffs.resize(static_cast<std::size_t>(deg) + 1);
    std::vector<std::int32_t> ring(static_cast<std::size_t>(p));

    auto g = [&] {
        return static_cast<std::int32_t>((s0.value() == 0) - (sq.value() == 0) -
                                         (sr.value() == 0) + (sqr.value() == 0));
    };

    std::int32_t sum = 0;
    for (std::int64_t k = k0; k <= 0; ++k) {
        if (k != k0) {
            s0.advance();
            sq.advance();
            sr.advance();
            sqr.advance();
        }
        const std::int32_t v = g();
        ring[static_cast<std::size_t>(k - k0)] = v;
        sum += v;
    }
    out.coeffs[0] = sum;

    std::size_t pos = 0; // slot of g(n-p) when computing a(n)
    for (std::int64_t n = 1; n <= deg; ++n) {
        s0.advance();
        sq.advance();
        sr.advance();
        sqr.advance();
        const std::int32_t v = g();
        sum += v - ring[pos];
        ring[pos] = v;
        if (++pos == ring.size()) pos = 0;
        out.coeffs[static_cast<std::size_t>(n)] = sum;
    }
    return out;
}

ExtremaSummary extrema(const CoefficientVector& v) {
    std::int32_t mx = 0, mn = 0, jump = 0, prev = 0;
    for (std::int32_t c : v.coeffs) {
        mx = std::max(mx, c);
        mn = std::min(mn, c);
        jump = std::max(jump, std::abs(c - prev));
        prev = c;
    }
    jump = std::max(jump, std::abs(prev)); // against a(deg+1) = 0
    return {mx, mn, std::max(mx, static_cast<std::int32_t>(-mn)), jump};
}

JumpDecomposition jump_decomposition(const FkContext& ctx, std::int64_t n) {
    require_index(n, ctx.degree() + 1);
    const std::int64_t p = ctx.p(), q = ctx.q(), r = ctx.r();
    const std::array<FkValue, 4> plus{fk(ctx, n), fk(ctx, n - p - q), fk(ctx, n - q - r),
                                      fk(ctx, n - r - p)};
    const std::array<FkValue, 4> minus{fk(ctx, n - p), fk(ctx, n - q), fk(ctx, n - r),
                                       fk(ctx, n - p - q - r)};
    auto count = [](const std::array<FkValue, 4>& t, FkValue d) {
        return static_cast<int>(std::count(t.begin(), t.end(), d));
    };
    const int n1p = count(plus, 1), n1m = count(minus, 1);
    if ((n1m - n1p) % 2 != 0)
        throw OddN1Sum("N- - N+ = " + std::to_string(n1m - n1p) + " is odd at n=" +
                       std::to_string(n));
    const int delta = (n1m - n1p) / 2;
    if (count(plus, 0) - count(minus, 0) != delta || count(plus, 2) - count(minus, 2) != delta)
        throw InternalCheckFailure("jump decomposition forms disagree at n=" + std::to_string(n));
    return {n1p, n1m};
}

} // namespace cyclo
