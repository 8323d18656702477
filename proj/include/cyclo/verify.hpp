#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/bounds.hpp"
#include "cyclo/coeffs.hpp"
#include "cyclo/fkseq.hpp"

namespace cyclo::verify {

// How to walk an index range: every value, or a seeded random sample
// (range endpoints always included). Ranges no longer than `samples` are
// walked exhaustively either way.
struct Sampling {
    bool exhaustive = false;
    std::int64_t samples = 4000;
    std::uint64_t seed = 12345;
};

struct CheckResult {
    std::string name;
    std::int64_t checked = 0;
    std::int64_t failed = 0;
    std::string first_failure;

    bool passed() const { return failed == 0; }
    void record_failure(const std::string& message) {
        if (failed++ == 0) first_failure = message;
    }
    void merge(const CheckResult& other);
};

// F_k in {0, 1, 2} across the legal window.
CheckResult check_fk_values(const FkContext& ctx, const Sampling& s);

// F_k = 0 forces a_k <= floor(k/qr); F_k = 2 forces
// a_k >= ceil((k+pq+rp)/qr).
CheckResult check_fk_support_bounds(const FkContext& ctx, const Sampling& s);

// The q- and r-shift case formulas equal the direct differences.
CheckResult check_shift_diffs(const FkContext& ctx, const Sampling& s);

// The five-branch table equals the direct alternating sum and depends
// only on a_k.
CheckResult check_double_diff(const FkContext& ctx, const Sampling& s);

CheckResult check_octuple(const FkContext& ctx, const Sampling& s);

// Sliding window output equals the series-division oracle, entrywise.
CheckResult check_oracle_equivalence(const CoefficientVector& oracle,
                                     const CoefficientVector& fast);
CheckResult check_oracle_equivalence(const TernaryTriple& t);

// Monic, constant term 1, palindrome, coefficient sum 1, |a| <= p-1.
CheckResult check_vector_invariants(const CoefficientVector& v);

// The three window-count forms agree with each other and with v.
CheckResult check_coefficient_forms(const FkContext& ctx, const CoefficientVector& v,
                                    const Sampling& s);

// A+ <= min{2a+b, p-b}, -A- <= min{p+2a-b, b},
// A <= min{2a+b*, p-b*} <= Bachman <= Bang; Beiter <= Bang for p >= 5.
CheckResult check_bound_chain(const FkContext& ctx, const ExtremaSummary& ex);

// max_jump <= 1 and the jump decomposition reproduces a(n) - a(n-1);
// (N+, N-) is never (0,4) or (4,0).
CheckResult check_jump(const FkContext& ctx, const CoefficientVector& v, const Sampling& s);

// case_counts passes its construction-time bounds and reconstructs v[n].
CheckResult check_case_counts(const FkContext& ctx, const CoefficientVector& v,
                              const Sampling& s);

// When the residue-class guarantee applies, the exact height honors it.
CheckResult check_residue_class_guarantee(const FkContext& ctx, const ExtremaSummary& ex);

// Grid-level checks for one p: the strictly-stronger count formula, the
// average bound, symmetry and the entry range.
std::vector<CheckResult> check_grid(std::int64_t p);

struct TripleReport {
    TernaryTriple triple;
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }
};

// Runs the full per-triple suite (everything above except the grid).
TripleReport check_triple(const TernaryTriple& t, const Sampling& s);

} // namespace cyclo::verify
