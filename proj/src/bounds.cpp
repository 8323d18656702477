#include "cyclo/bounds.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace cyclo {

namespace {

constexpr int encode(FkValue f0, FkValue f1, FkValue f2, FkValue f3) {
    return ((f0 * 3 + f1) * 3 + f2) * 3 + f3;
}

constexpr std::array<CaseLabel, 81> build_case_table() {
    std::array<CaseLabel, 81> t{};
    t[encode(0, 0, 1, 0)] = CaseLabel::Case1;
    t[encode(0, 1, 0, 0)] = CaseLabel::Case1;
    t[encode(0, 1, 1, 1)] = CaseLabel::Case1;
    t[encode(1, 1, 1, 0)] = CaseLabel::Case1;
    t[encode(0, 0, 0, 1)] = CaseLabel::Case2;
    t[encode(1, 0, 0, 0)] = CaseLabel::Case2;
    t[encode(1, 0, 1, 1)] = CaseLabel::Case2;
    t[encode(1, 1, 0, 1)] = CaseLabel::Case2;
    t[encode(0, 1, 1, 2)] = CaseLabel::Case3a;
    t[encode(2, 1, 1, 0)] = CaseLabel::Case3b;
    t[encode(1, 0, 2, 1)] = CaseLabel::Case4;
    t[encode(1, 2, 0, 1)] = CaseLabel::Case4;
    return t;
}

constexpr auto kCaseTable = build_case_table();

} // namespace

BoundPair height_bounds_split(const FkContext& ctx) {
    const std::int64_t p = ctx.p(), a = ctx.alpha, b = ctx.beta;
    return {std::min(2 * a + b, p - b), std::min(p + 2 * a - b, b)};
}

std::int64_t height_bound(const FkContext& ctx) {
    return std::min(2 * ctx.alpha + ctx.beta_star, ctx.p() - ctx.beta_star);
}

std::int64_t bachman_bound(const FkContext& ctx) {
    return std::min((ctx.p() - 1) / 2 + ctx.alpha, ctx.p() - ctx.beta_star);
}

ClassicBounds classic_bounds(std::int64_t p) {
    return {p - 1, p - p / 4};
}

CaseLabel case_label_for(FkValue f_k, FkValue f_kq, FkValue f_kr, FkValue f_kqr) {
    return kCaseTable[static_cast<std::size_t>(encode(f_k, f_kq, f_kr, f_kqr))];
}

CaseLabel classify_case(const FkContext& ctx, std::int64_t k) {
    const std::int64_t q = ctx.q(), r = ctx.r();
    return case_label_for(fk(ctx, k), fk(ctx, k - q), fk(ctx, k - r), fk(ctx, k - q - r));
}

int case_contribution(CaseLabel label) {
    switch (label) {
        case CaseLabel::Case1:
        case CaseLabel::Case3a:
        case CaseLabel::Case3b:
            return 1;
        case CaseLabel::Case2:
        case CaseLabel::Case4:
            return -1;
        case CaseLabel::None:
            return 0;
    }
    return 0;
}

CaseCounts case_counts(const FkContext& ctx, std::int64_t n) {
    if (n < 0 || n > ctx.degree())
        throw IndexOutOfRange("case_counts: n=" + std::to_string(n) + " outside [0, " +
                              std::to_string(ctx.degree()) + "]");
    const std::int64_t p = ctx.p(), q = ctx.q(), r = ctx.r();
    CaseCounts counts{0, 0, 0, 0, 0, n / (q * r) + 1, 0};

    std::int64_t coefficient = 0;
    for (std::int64_t k = n - p + 1; k <= n; ++k) {
        const FkValue f0 = fk(ctx, k), f1 = fk(ctx, k - q);
        const FkValue f2 = fk(ctx, k - r), f3 = fk(ctx, k - q - r);
        const CaseLabel label = case_label_for(f0, f1, f2, f3);
        const int n0_diff = (f0 == 0) + (f3 == 0) - (f1 == 0) - (f2 == 0);
        if (n0_diff != case_contribution(label))
            throw InternalCheckFailure("case table does not reproduce the N0 difference at k=" +
                                       std::to_string(k));
        coefficient += n0_diff;
        switch (label) {
            case CaseLabel::Case1: ++counts.c1; break;
            case CaseLabel::Case2: ++counts.c2; break;
            case CaseLabel::Case3a: ++counts.c3a; break;
            case CaseLabel::Case3b: ++counts.c3b; break;
            case CaseLabel::Case4: ++counts.c4; break;
            case CaseLabel::None: break;
        }
    }
    counts.coefficient = coefficient;

    const std::int64_t a = ctx.alpha, b = ctx.beta;
    const std::int64_t sum = ctx.inv_max + ctx.inv_min;
    auto violation = [&](const std::string& what) {
        throw BoundViolation("case_counts at n=" + std::to_string(n) + " for (" +
                             std::to_string(p) + ", " + std::to_string(q) + ", " +
                             std::to_string(r) + "): " + what);
    };
    if (counts.c1 > a) violation("C1 > alpha");
    if (counts.c2 > a) violation("C2 > alpha");
    if (counts.c3a + counts.c3b > std::min(a + b, p - a - b)) violation("C3 bound exceeded");
    if (counts.c4 > std::min(b - a, p + a - b)) violation("C4 bound exceeded");
    if (sum <= p && counts.c3a != 0) violation("C3a nonzero although M+m <= p");
    if (sum >= p && counts.c3b != 0) violation("C3b nonzero although M+m >= p");
    if (coefficient != (counts.c1 + counts.c3a + counts.c3b) - (counts.c2 + counts.c4))
        violation("signed case sum does not reconstruct a(n)");
    if (coefficient > counts.c1 + counts.c3a + counts.c3b) violation("a(n) > C1+C3a+C3b");
    if (-coefficient > counts.c2 + counts.c4) violation("-a(n) > C2+C4");
    return counts;
}

std::optional<int> residue_class_guarantee(const FkContext& ctx) {
    const std::int64_t p = ctx.p();
    if (p <= 3)
        throw RequiresPGreaterThan3("residue_class_guarantee needs p > 3, got p=" +
                                    std::to_string(p));
    // p = 2a+1 = 3b±1 = 4c±1 = 6d±1; membership in {±1, ±a, ±b, ±c, ±d}.
    const std::int64_t a = (p - 1) / 2;
    const std::int64_t b = (p % 3 == 1) ? (p - 1) / 3 : (p + 1) / 3;
    const std::int64_t c = (p % 4 == 1) ? (p - 1) / 4 : (p + 1) / 4;
    const std::int64_t d = (p % 6 == 1) ? (p - 1) / 6 : (p + 1) / 6;
    const std::array<std::int64_t, 5> gens{1, a, b, c, d};

    auto in_class = [&](std::int64_t residue) {
        for (std::int64_t g : gens)
            if (residue == g || residue == p - g) return true;
        return false;
    };
    const std::int64_t q_res = euclid_mod(ctx.q(), p);
    const std::int64_t r_res = euclid_mod(ctx.r(), p);
    if (!in_class(q_res) || !in_class(r_res)) return std::nullopt;

    const bool units = (q_res == 1 || q_res == p - 1) && (r_res == 1 || r_res == p - 1);
    const int guarantee = units ? 3 : 18;
    if (height_bound(ctx) > guarantee)
        throw BoundViolation("residue class guarantee " + std::to_string(guarantee) +
                             " below the height bound for (" + std::to_string(p) + ", " +
                             std::to_string(ctx.q()) + ", " + std::to_string(ctx.r()) + ")");
    return guarantee;
}

namespace {

BoundReport assemble(const FkContext& ctx, std::optional<ExtremaSummary> ex) {
    const auto split = height_bounds_split(ctx);
    const auto classic = classic_bounds(ctx.p());
    BoundReport report{ctx.triple,     ctx.alpha,          ctx.beta,       ctx.beta_star,
                       split.plus,     split.minus,        height_bound(ctx),
                       bachman_bound(ctx), classic.beiter, classic.bang,   ex};
    if (report.bound_new > report.bound_bachman)
        throw BoundViolation("height bound exceeds the Bachman value");
    if (ex) {
        if (ex->a_plus > report.bound_a_plus || -ex->a_minus > report.bound_a_minus ||
            ex->height > report.bound_new)
            throw BoundViolation("exact extrema exceed the computed bounds for (" +
                                 std::to_string(ctx.p()) + ", " + std::to_string(ctx.q()) + ", " +
                                 std::to_string(ctx.r()) + ")");
    }
    return report;
}

} // namespace

BoundReport make_bound_report(const FkContext& ctx) { return assemble(ctx, std::nullopt); }

BoundReport make_bound_report(const FkContext& ctx, const ExtremaSummary& ex) {
    return assemble(ctx, ex);
}

} // namespace cyclo
