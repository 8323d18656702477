#pragma once

#include <cstdint>
#include <optional>

#include "cyclo/coeffs.hpp"

namespace cyclo {

// Row of the 4-tuple classification table for
// (F_k, F_{k-q}, F_{k-r}, F_{k-q-r}). Cases 1, 3a and 3b contribute +1 to
// the coefficient, cases 2 and 4 contribute -1; every other tuple
// contributes nothing.
enum class CaseLabel { None, Case1, Case2, Case3a, Case3b, Case4 };

// min{2*alpha+beta, p-beta} for the max coefficient and
// min{p+2*alpha-beta, beta} for the negated min coefficient.
struct BoundPair {
    std::int64_t plus;
    std::int64_t minus;
};
BoundPair height_bounds_split(const FkContext& ctx);

// min{2*alpha + beta*, p - beta*}; never weaker than the Bachman value.
std::int64_t height_bound(const FkContext& ctx);

// min{(p-1)/2 + alpha, p - beta*}.
std::int64_t bachman_bound(const FkContext& ctx);

// p-1 and p - floor(p/4).
struct ClassicBounds {
    std::int64_t bang;
    std::int64_t beiter;
};
ClassicBounds classic_bounds(std::int64_t p);

// Table lookup on an explicit 4-tuple of F values.
CaseLabel case_label_for(FkValue f_k, FkValue f_kq, FkValue f_kr, FkValue f_kqr);

CaseLabel classify_case(const FkContext& ctx, std::int64_t k);

// Signed coefficient contribution of a case row: +1, -1 or 0.
int case_contribution(CaseLabel label);

// Case counts over the window k in {n-p+1, ..., n}, plus
// gamma = floor(n/qr) + 1. Construction verifies the count bounds
//   C1, C2 <= alpha, C3a+C3b <= min{alpha+beta, p-alpha-beta},
//   C4 <= min{beta-alpha, p+alpha-beta}
// and the exact reconstruction a(n) = (C1+C3a+C3b) - (C2+C4); a
// violation throws BoundViolation and indicates a bug, not bad input.
struct CaseCounts {
    std::int64_t c1, c2, c3a, c3b, c4;
    std::int64_t gamma;
    std::int64_t coefficient; // a(n) reconstructed from the window
};
CaseCounts case_counts(const FkContext& ctx, std::int64_t n);

// Constant height guarantee from the residue classes of q and r mod p:
// 18 when both inverse-generating residues lie in {±1, ±a, ±b, ±c, ±d}
// for p = 2a+1 = 3b±1 = 4c±1 = 6d±1, sharpened to 3 when both are ±1.
// Empty when the hypothesis fails; requires p > 3.
std::optional<int> residue_class_guarantee(const FkContext& ctx);

// Every bound for one triple, with the exact extrema when available.
struct BoundReport {
    TernaryTriple triple;
    std::int64_t alpha, beta, beta_star;
    std::int64_t bound_a_plus;  // on A+
    std::int64_t bound_a_minus; // on -A-
    std::int64_t bound_new;     // on A = max{A+, -A-}
    std::int64_t bound_bachman;
    std::int64_t bound_beiter;
    std::int64_t bound_bang;
    std::optional<ExtremaSummary> exact;

    bool tight() const { return exact && exact->height == bound_new; }
};

BoundReport make_bound_report(const FkContext& ctx);
BoundReport make_bound_report(const FkContext& ctx, const ExtremaSummary& ex);

} // namespace cyclo
