#include "cyclo/fkseq.hpp"

#include <algorithm>
#include <string>

namespace cyclo {

namespace {

[[noreturn]] void throw_out_of_window(const FkContext& ctx, std::int64_t k) {
    throw OutOfWindow("F_k undefined at k=" + std::to_string(k) + " for (" +
                      std::to_string(ctx.p()) + ", " + std::to_string(ctx.q()) + ", " +
                      std::to_string(ctx.r()) + "); legal window is (" +
                      std::to_string(ctx.window_lo) + ", " + std::to_string(ctx.window_hi) + ")");
}

void require_window(const FkContext& ctx, std::int64_t k) {
    if (!ctx.in_window(k)) throw_out_of_window(ctx, k);
}

std::int64_t residue_a(const FkContext& ctx, std::int64_t k) {
    return mul_mod(euclid_mod(k, ctx.p()), ctx.qr_inv_p, ctx.p());
}

std::int64_t residue_b(const FkContext& ctx, std::int64_t k) {
    return mul_mod(euclid_mod(k, ctx.q()), ctx.rp_inv_q, ctx.q());
}

std::int64_t residue_c(const FkContext& ctx, std::int64_t k) {
    return mul_mod(euclid_mod(k, ctx.r()), ctx.pq_inv_r, ctx.r());
}

} // namespace

FkContext make_context(const TernaryTriple& t) {
    FkContext ctx{.triple = t,
                  .qr_inv_p = mod_inverse(t.q * t.r, t.p),
                  .rp_inv_q = mod_inverse(t.r * t.p, t.q),
                  .pq_inv_r = mod_inverse(t.p * t.q, t.r),
                  .q_inv_p = mod_inverse(t.q, t.p),
                  .r_inv_p = mod_inverse(t.r, t.p),
                  .p_inv_q = mod_inverse(t.p, t.q),
                  .p_inv_r = mod_inverse(t.p, t.r),
                  .inv_max = 0,
                  .inv_min = 0,
                  .alpha = 0,
                  .beta = 0,
                  .beta_star = 0,
                  .window_lo = -(t.q * t.r + t.r * t.p + t.p * t.q),
                  .window_hi = t.p * t.q * t.r,
                  .f_step = {}};

    ctx.inv_max = std::max(ctx.q_inv_p, ctx.r_inv_p);
    ctx.inv_min = std::min(ctx.q_inv_p, ctx.r_inv_p);
    ctx.alpha = std::min(ctx.inv_min, t.p - ctx.inv_max);
    ctx.beta = mod_inverse(mul_mod(ctx.alpha, euclid_mod(t.q * t.r, t.p), t.p), t.p);
    ctx.beta_star = std::min(ctx.beta, t.p - ctx.beta);

    // Two independent derivations of (alpha, beta) must coincide.
    const std::int64_t sum = ctx.inv_max + ctx.inv_min;
    if (sum >= t.p && (ctx.alpha != t.p - ctx.inv_max || ctx.beta != t.p - ctx.inv_min))
        throw InternalCheckFailure("make_context: alpha/beta mismatch (M+m >= p branch)");
    if (sum <= t.p && (ctx.alpha != ctx.inv_min || ctx.beta != ctx.inv_max))
        throw InternalCheckFailure("make_context: alpha/beta mismatch (M+m <= p branch)");
    if (!(ctx.alpha >= 1 && ctx.alpha <= ctx.beta_star && 2 * ctx.beta_star <= t.p - 1))
        throw InternalCheckFailure("make_context: 1 <= alpha <= beta* <= (p-1)/2 violated");

    const std::int64_t pqr = ctx.window_hi;
    for (unsigned mask = 0; mask < 8; ++mask) {
        const std::int64_t da = ctx.qr_inv_p - ((mask & 4) ? t.p : 0);
        const std::int64_t db = ctx.rp_inv_q - ((mask & 2) ? t.q : 0);
        const std::int64_t dc = ctx.pq_inv_r - ((mask & 1) ? t.r : 0);
        const std::int64_t num = da * t.q * t.r + db * t.r * t.p + dc * t.p * t.q - 1;
        if (num % pqr != 0)
            throw InternalCheckFailure("make_context: F step not divisible by pqr");
        ctx.f_step[mask] = static_cast<FkValue>(num / pqr);
    }
    return ctx;
}

FkValue fk(const FkContext& ctx, std::int64_t k) {
    require_window(ctx, k);
    const TernaryTriple& t = ctx.triple;
    const std::int64_t num = residue_a(ctx, k) * t.q * t.r + residue_b(ctx, k) * t.r * t.p +
                             residue_c(ctx, k) * t.p * t.q - k;
    const std::int64_t pqr = t.product();
    if (num % pqr != 0)
        throw InternalCheckFailure("fk: numerator not divisible by pqr at k=" + std::to_string(k));
    return static_cast<FkValue>(num / pqr);
}

std::vector<FkValue> fk_range(const FkContext& ctx, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) return {};
    require_window(ctx, lo);
    require_window(ctx, hi);
    std::vector<FkValue> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    FkStream stream(ctx, lo);
    out.push_back(stream.value());
    for (std::int64_t k = lo + 1; k <= hi; ++k) {
        stream.advance();
        out.push_back(stream.value());
    }
    return out;
}

int fk_diff_q(const FkContext& ctx, std::int64_t k) {
    require_window(ctx, k);
    require_window(ctx, k - ctx.q());
    const bool a_low = residue_a(ctx, k) < ctx.r_inv_p;
    const bool c_low = residue_c(ctx, k) < ctx.p_inv_r;
    if (a_low && c_low) return -1;
    if (!a_low && !c_low) return 1;
    return 0;
}

int fk_diff_r(const FkContext& ctx, std::int64_t k) {
    require_window(ctx, k);
    require_window(ctx, k - ctx.r());
    const bool a_low = residue_a(ctx, k) < ctx.q_inv_p;
    const bool b_low = residue_b(ctx, k) < ctx.p_inv_q;
    if (a_low && b_low) return -1;
    if (!a_low && !b_low) return 1;
    return 0;
}

int fk_double_diff(const FkContext& ctx, std::int64_t k) {
    require_window(ctx, k);
    require_window(ctx, k - ctx.q() - ctx.r());
    const std::int64_t a = residue_a(ctx, k);
    const std::int64_t sum = ctx.inv_max + ctx.inv_min;
    if (a < sum - ctx.p()) return 0;
    if (a < ctx.inv_min) return -1;
    if (a < ctx.inv_max) return 0;
    if (a < sum) return 1;
    return 0;
}

bool check_octuple_identity(const FkContext& ctx, std::int64_t k) {
    const std::int64_t p = ctx.p(), q = ctx.q(), r = ctx.r();
    require_window(ctx, k);
    require_window(ctx, k - p - q - r);
    const std::int64_t lhs = fk(ctx, k) + fk(ctx, k - p - q) + fk(ctx, k - q - r) + fk(ctx, k - r - p);
    const std::int64_t rhs = fk(ctx, k - p) + fk(ctx, k - q) + fk(ctx, k - r) + fk(ctx, k - p - q - r);
    return lhs == rhs;
}

FkStream::FkStream(const FkContext& ctx, std::int64_t start_k)
    : p_(ctx.p()),
      q_(ctx.q()),
      r_(ctx.r()),
      sa_(ctx.qr_inv_p),
      sb_(ctx.rp_inv_q),
      sc_(ctx.pq_inv_r),
      steps_(ctx.f_step),
      a_(residue_a(ctx, start_k)),
      b_(residue_b(ctx, start_k)),
      c_(residue_c(ctx, start_k)),
      f_(fk(ctx, start_k)) {}

} // namespace cyclo
