#include "cyclo/verify.hpp"

#include <random>

#include "cyclo/stats.hpp"

namespace cyclo::verify {

namespace {

std::string triple_str(const TernaryTriple& t) {
    return "(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(t.r) + ")";
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Visits [lo, hi] exhaustively or as a seeded sample with both endpoints.
template <typename Fn>
void walk(std::int64_t lo, std::int64_t hi, const Sampling& s, Fn&& fn) {
    if (lo > hi) return;
    if (s.exhaustive || hi - lo + 1 <= s.samples) {
        for (std::int64_t k = lo; k <= hi; ++k) fn(k);
        return;
    }
    fn(lo);
    fn(hi);
    std::mt19937_64 rng(s.seed);
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    for (std::int64_t i = 2; i < s.samples; ++i) fn(dist(rng));
}

std::int64_t residue_a(const FkContext& ctx, std::int64_t k) {
    return mul_mod(euclid_mod(k, ctx.p()), ctx.qr_inv_p, ctx.p());
}

} // namespace

void CheckResult::merge(const CheckResult& other) {
    checked += other.checked;
    if (other.failed > 0 && failed == 0) first_failure = other.first_failure;
    failed += other.failed;
}

CheckResult check_fk_values(const FkContext& ctx, const Sampling& s) {
    CheckResult res{"fk-values", 0, 0, ""};
    walk(ctx.window_lo + 1, ctx.window_hi - 1, s, [&](std::int64_t k) {
        ++res.checked;
        const FkValue f = fk(ctx, k);
        if (f < 0 || f > 2)
            res.record_failure(triple_str(ctx.triple) + " k=" + std::to_string(k) +
                               ": F=" + std::to_string(f) + " outside {0,1,2}");
    });
    return res;
}

CheckResult check_fk_support_bounds(const FkContext& ctx, const Sampling& s) {
    CheckResult res{"fk-support-bounds", 0, 0, ""};
    const std::int64_t qr = ctx.q() * ctx.r();
    const std::int64_t shift = ctx.p() * ctx.q() + ctx.r() * ctx.p();
    walk(ctx.window_lo + 1, ctx.window_hi - 1, s, [&](std::int64_t k) {
        ++res.checked;
        const FkValue f = fk(ctx, k);
        const std::int64_t a = residue_a(ctx, k);
        if (f == 0 && a > floor_div(k, qr))
            res.record_failure(triple_str(ctx.triple) + " k=" + std::to_string(k) +
                               ": F=0 but a_k=" + std::to_string(a) + " > floor(k/qr)");
        if (f == 2 && a < ceil_div(k + shift, qr))
            res.record_failure(triple_str(ctx.triple) + " k=" + std::to_string(k) +
                               ": F=2 but a_k=" + std::to_string(a) + " < ceil((k+pq+rp)/qr)");
    });
    return res;
}

CheckResult check_shift_diffs(const FkContext& ctx, const Sampling& s) {
    CheckResult res{"fk-shift-diffs", 0, 0, ""};
    walk(ctx.window_lo + 1 + ctx.q(), ctx.window_hi - 1, s, [&](std::int64_t k) {
        ++res.checked;
        const int direct = fk(ctx, k) - fk(ctx, k - ctx.q());
        const int formula = fk_diff_q(ctx, k);
        if (direct != formula)
            res.record_failure(triple_str(ctx.triple) + " k=" + std::to_string(k) +
                               ": q-shift formula " + std::to_string(formula) + " != direct " +
                               std::to_string(direct));
    });
    walk(ctx.window_lo + 1 + ctx.r(), ctx.window_hi - 1, s, [&](std::int64_t k) {
        ++res.checked;
        const int direct = fk(ctx, k) - fk(ctx, k - ctx.r());
        const int formula = fk_diff_r(ctx, k);
        if (direct != formula)
            res.record_failure(triple_str(ctx.triple) + " k=" + std::to_string(k) +
                               ": r-shift formula " + std::to_string(formula) + " != direct " +
                               std::to_string(direct));
    });
    return res;
}

CheckResult check_double_diff(const FkContext& ctx, const Sampling& s) {
    CheckResult res{"fk-double-diff", 0, 0, ""};
    // value by residue class of a_k; 9 marks "not seen yet"
    std::vector<std::int8_t> by_class(static_cast<std::size_t>(ctx.p()), 9);
    walk(ctx.window_lo + 1 + ctx.q() + ctx.r(), ctx.window_hi - 1, s, [&](std::int64_t k) {
        ++res.checked;
        const int direct = fk(ctx, k) - fk(ctx, k - ctx.q()) - fk(ctx, k - ctx.r()) +
                           fk(ctx, k - ctx.q() - ctx.r());
        const int formula = fk_double_diff(ctx, k);
        if (direct != formula) {
            res.record_failure(triple_str(ctx.triple) + " k=" + std::to_string(k) +
                               ": branch table " + std::to_string(formula) + " != direct " +
                               std::to_string(direct));
            return;
        }
        auto& slot = by_class[static_cast<std::size_t>(residue_a(ctx, k))];
        if (slot == 9) slot = static_cast<std::int8_t>(formula);
        else if (slot != formula)
            res.record_failure(triple_str(ctx.triple) + " k=" + std::to_string(k) +
                               ": value differs within residue class a_k");
    });
    return res;
}

CheckResult check_octuple(const FkContext& ctx, const Sampling& s) {
    CheckResult res{"fk-octuple", 0, 0, ""};
    const std::int64_t shift = ctx.p() + ctx.q() + ctx.r();
    walk(ctx.window_lo + 1 + shift, ctx.window_hi - 1, s, [&](std::int64_t k) {
        ++res.checked;
        if (!check_octuple_identity(ctx, k))
            res.record_failure(triple_str(ctx.triple) + " k=" + std::to_string(k) +
                               ": octuple identity fails");
    });
    return res;
}

CheckResult check_oracle_equivalence(const CoefficientVector& oracle,
                                     const CoefficientVector& fast) {
    CheckResult res{"oracle-equivalence", 0, 0, ""};
    if (oracle.coeffs.size() != fast.coeffs.size()) {
        res.checked = 1;
        res.record_failure(triple_str(oracle.triple) + ": vector sizes differ");
        return res;
    }
    for (std::size_t n = 0; n < oracle.coeffs.size(); ++n) {
        ++res.checked;
        if (oracle.coeffs[n] != fast.coeffs[n])
            res.record_failure(triple_str(oracle.triple) + " n=" + std::to_string(n) +
                               ": oracle " + std::to_string(oracle.coeffs[n]) + " != window " +
                               std::to_string(fast.coeffs[n]));
    }
    return res;
}

CheckResult check_oracle_equivalence(const TernaryTriple& t) {
    const auto oracle = oracle_coefficients(t);
    const auto fast = all_coefficients(make_context(t));
    return check_oracle_equivalence(oracle, fast);
}

CheckResult check_vector_invariants(const CoefficientVector& v) {
    CheckResult res{"vector-invariants", 0, 0, ""};
    const std::int64_t deg = v.degree();
    const auto tag = [&](const std::string& what) {
        res.record_failure(triple_str(v.triple) + ": " + what);
    };
    ++res.checked;
    if (v.at_or_zero(0) != 1) tag("constant term != 1");
    ++res.checked;
    if (v.at_or_zero(deg) != 1) tag("leading coefficient != 1");
    std::int64_t sum = 0;
    for (std::int64_t n = 0; n <= deg; ++n) {
        sum += v.at_or_zero(n);
        ++res.checked;
        if (v.at_or_zero(n) != v.at_or_zero(deg - n)) {
            tag("palindrome breaks at n=" + std::to_string(n));
            break;
        }
        if (std::abs(v.at_or_zero(n)) > v.triple.p - 1) {
            tag("|a(n)| > p-1 at n=" + std::to_string(n));
            break;
        }
    }
    ++res.checked;
    if (sum != 1) tag("coefficient sum " + std::to_string(sum) + " != 1");
    return res;
}

CheckResult check_coefficient_forms(const FkContext& ctx, const CoefficientVector& v,
                                    const Sampling& s) {
    CheckResult res{"coefficient-forms", 0, 0, ""};
    walk(0, ctx.degree(), s, [&](std::int64_t n) {
        ++res.checked;
        try {
            const auto var = coefficient_at_variants(ctx, n);
            const std::int32_t expected = v.at_or_zero(n);
            if (var.via_n0 != expected || var.via_n2 != expected || var.via_half_n1 != expected)
                res.record_failure(triple_str(ctx.triple) + " n=" + std::to_string(n) +
                                   ": forms (" + std::to_string(var.via_n0) + "," +
                                   std::to_string(var.via_n2) + "," +
                                   std::to_string(var.via_half_n1) + ") != coefficient " +
                                   std::to_string(expected));
        } catch (const Error& e) {
            res.record_failure(e.what());
        }
    });
    return res;
}

CheckResult check_bound_chain(const FkContext& ctx, const ExtremaSummary& ex) {
    CheckResult res{"bound-chain", 0, 0, ""};
    const auto split = height_bounds_split(ctx);
    const std::int64_t new_bound = height_bound(ctx);
    const std::int64_t bachman = bachman_bound(ctx);
    const auto classic = classic_bounds(ctx.p());
    const auto tag = [&](const std::string& what) {
        res.record_failure(triple_str(ctx.triple) + ": " + what);
    };
    ++res.checked;
    if (ex.a_plus > split.plus) tag("A+ exceeds its bound");
    ++res.checked;
    if (-ex.a_minus > split.minus) tag("-A- exceeds its bound");
    ++res.checked;
    if (ex.height > new_bound) tag("A exceeds the height bound");
    ++res.checked;
    if (new_bound > bachman) tag("height bound exceeds the Bachman value");
    ++res.checked;
    if (bachman > classic.bang) tag("Bachman value exceeds the Bang value");
    ++res.checked;
    if (ctx.p() >= 5 && classic.beiter > classic.bang) tag("Beiter value exceeds the Bang value");
    ++res.checked;
    if (split.plus < 1 || split.minus < 1) tag("split bounds below 1");
    return res;
}

CheckResult check_jump(const FkContext& ctx, const CoefficientVector& v, const Sampling& s) {
    CheckResult res{"jump-one", 0, 0, ""};
    ++res.checked;
    if (extrema(v).max_jump > 1)
        res.record_failure(triple_str(ctx.triple) + ": max jump exceeds 1");
    walk(0, ctx.degree() + 1, s, [&](std::int64_t n) {
        ++res.checked;
        try {
            const auto jd = jump_decomposition(ctx, n);
            const int expected = v.at_or_zero(n) - v.at_or_zero(n - 1);
            if (jd.delta() != expected)
                res.record_failure(triple_str(ctx.triple) + " n=" + std::to_string(n) +
                                   ": (N- - N+)/2 = " + std::to_string(jd.delta()) +
                                   " != a(n)-a(n-1) = " + std::to_string(expected));
            if ((jd.n_plus == 0 && jd.n_minus == 4) || (jd.n_plus == 4 && jd.n_minus == 0))
                res.record_failure(triple_str(ctx.triple) + " n=" + std::to_string(n) +
                                   ": impossible (N+, N-) = (" + std::to_string(jd.n_plus) + "," +
                                   std::to_string(jd.n_minus) + ")");
        } catch (const Error& e) {
            res.record_failure(e.what());
        }
    });
    return res;
}

CheckResult check_case_counts(const FkContext& ctx, const CoefficientVector& v,
                              const Sampling& s) {
    CheckResult res{"case-counts", 0, 0, ""};
    walk(0, ctx.degree(), s, [&](std::int64_t n) {
        ++res.checked;
        try {
            const auto counts = case_counts(ctx, n);
            if (counts.coefficient != v.at_or_zero(n))
                res.record_failure(triple_str(ctx.triple) + " n=" + std::to_string(n) +
                                   ": case reconstruction " + std::to_string(counts.coefficient) +
                                   " != a(n) = " + std::to_string(v.at_or_zero(n)));
        } catch (const Error& e) {
            res.record_failure(e.what());
        }
    });
    return res;
}

CheckResult check_residue_class_guarantee(const FkContext& ctx, const ExtremaSummary& ex) {
    CheckResult res{"residue-class-height", 0, 0, ""};
    if (ctx.p() <= 3) return res; // inapplicable, nothing checked
    ++res.checked;
    try {
        const auto guarantee = residue_class_guarantee(ctx);
        if (guarantee && ex.height > *guarantee)
            res.record_failure(triple_str(ctx.triple) + ": exact height " +
                               std::to_string(ex.height) + " exceeds the class guarantee " +
                               std::to_string(*guarantee));
    } catch (const Error& e) {
        res.record_failure(e.what());
    }
    return res;
}

std::vector<CheckResult> check_grid(std::int64_t p) {
    std::vector<CheckResult> out;

    CheckResult stronger{"stronger-count", 0, 0, ""};
    ++stronger.checked;
    const std::int64_t observed = stronger_count(p);
    const std::int64_t expected = (p - 3) * (p - 5) / 2;
    if (observed != expected)
        stronger.record_failure("p=" + std::to_string(p) + ": stronger count " +
                                std::to_string(observed) + " != " + std::to_string(expected));
    out.push_back(stronger);

    CheckResult average{"grid-average", 0, 0, ""};
    ++average.checked;
    try {
        const Rational avg = grid_average(p);
        if (avg > Rational(p + 1, 2))
            average.record_failure("p=" + std::to_string(p) + ": average exceeds (p+1)/2");
    } catch (const Error& e) {
        average.record_failure(e.what());
    }
    out.push_back(average);

    CheckResult symmetry{"grid-symmetry", 0, 0, ""};
    const ResidueGrid grid = residue_grid(p);
    for (std::int64_t i = 1; i < p; ++i)
        for (std::int64_t j = 1; j < p; ++j) {
            ++symmetry.checked;
            const std::int32_t v = grid.at(i, j);
            if (v != grid.at(j, i))
                symmetry.record_failure("p=" + std::to_string(p) + ": a(" + std::to_string(i) +
                                        "," + std::to_string(j) + ") != a(j,i)");
            else if (v != grid.at(p - i, p - j))
                symmetry.record_failure("p=" + std::to_string(p) + ": a(" + std::to_string(i) +
                                        "," + std::to_string(j) + ") != a(p-i,p-j)");
            else if (v < 1 || v > p - 1)
                symmetry.record_failure("p=" + std::to_string(p) + ": entry " + std::to_string(v) +
                                        " outside [1, p-1]");
        }
    out.push_back(symmetry);
    return out;
}

TripleReport check_triple(const TernaryTriple& t, const Sampling& s) {
    const FkContext ctx = make_context(t);
    const CoefficientVector oracle = oracle_coefficients(t);
    const CoefficientVector fast = all_coefficients(ctx);
    const ExtremaSummary ex = extrema(oracle);

    TripleReport report{t, {}};
    report.checks.push_back(check_fk_values(ctx, s));
    report.checks.push_back(check_fk_support_bounds(ctx, s));
    report.checks.push_back(check_shift_diffs(ctx, s));
    report.checks.push_back(check_double_diff(ctx, s));
    report.checks.push_back(check_octuple(ctx, s));
    report.checks.push_back(check_oracle_equivalence(oracle, fast));
    report.checks.push_back(check_vector_invariants(oracle));
    report.checks.push_back(check_coefficient_forms(ctx, oracle, s));
    report.checks.push_back(check_bound_chain(ctx, ex));
    report.checks.push_back(check_jump(ctx, oracle, s));
    report.checks.push_back(check_case_counts(ctx, oracle, s));
    report.checks.push_back(check_residue_class_guarantee(ctx, ex));
    return report;
}

} // namespace cyclo::verify
