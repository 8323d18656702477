#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/fkseq.hpp"

namespace cyclo {

// Hard cap on (p-1)(q-1)(r-1) for full-vector computations.
inline constexpr std::int64_t kDegreeCap = 100'000'000;

// Dense coefficients of the degree-(p-1)(q-1)(r-1) polynomial attached to
// a triple, index n = 0..deg. Monic, palindromic, coefficient sum 1.
struct CoefficientVector {
    TernaryTriple triple;
    std::vector<std::int32_t> coeffs;

    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }

    // Coefficients outside [0, deg] are 0.
    std::int32_t at_or_zero(std::int64_t n) const {
        if (n < 0 || n >= static_cast<std::int64_t>(coeffs.size())) return 0;
        return coeffs[static_cast<std::size_t>(n)];
    }
};

struct ExtremaSummary {
    std::int32_t a_plus;   // max coefficient
    std::int32_t a_minus;  // min coefficient
    std::int32_t height;   // max{a_plus, -a_minus}
    std::int32_t max_jump; // max |a(n) - a(n-1)|, with a(-1) = a(deg+1) = 0
};

// Exact coefficients via truncated power series division, independent of
// the F_k machinery: expand (1-x^pqr)(1-x^p)(1-x^q)(1-x^r) and divide by
// (1-x^d) for d = 1, qr, rp, pq as running sums at stride d.
CoefficientVector oracle_coefficients(const TernaryTriple& t);

// Single coefficient from the window identity
//   a(n) = sum_{k=n-p+1}^{n} (N0(F_k, F_{k-q-r}) - N0(F_{k-q}, F_{k-r}))
// using O(p) pointwise F evaluations.
std::int64_t coefficient_at(const FkContext& ctx, std::int64_t n);

// The same coefficient from all three count identities; the three values
// always agree, and the N1 sum is even before halving.
struct CoefficientVariants {
    std::int64_t via_n0, via_n2, via_half_n1;
};
CoefficientVariants coefficient_at_variants(const FkContext& ctx, std::int64_t n);

// Full vector in O(deg): with g(k) = [F_k=0] - [F_{k-q}=0] - [F_{k-r}=0]
// + [F_{k-q-r}=0], a(n) = a(n-1) + g(n) - g(n-p). Four incremental
// F streams and a ring buffer of the last p values of g.
CoefficientVector all_coefficients(const FkContext& ctx);

ExtremaSummary extrema(const CoefficientVector& v);

// Counts of 1's among the two 4-tuples of F values that control the jump
// a(n) - a(n-1) = (n_minus - n_plus) / 2.
struct JumpDecomposition {
    int n_plus;  // 1's among F_n, F_{n-p-q}, F_{n-q-r}, F_{n-r-p}
    int n_minus; // 1's among F_{n-p}, F_{n-q}, F_{n-r}, F_{n-p-q-r}

    int delta() const { return (n_minus - n_plus) / 2; }
};

// Valid for 0 <= n <= deg+1; cross-checks the N0 and N2 difference forms
// against (N- - N+)/2 internally.
JumpDecomposition jump_decomposition(const FkContext& ctx, std::int64_t n);

} // namespace cyclo
