#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cyclo/arith.hpp"

namespace cyclo {

// Value of F_k; always 0, 1 or 2 inside the legal window.
using FkValue = std::int32_t;

// Precomputed modular data for one triple: the CRT extraction inverses,
// the inverse residues q', r', p_q', p_r', and the derived bound
// parameters alpha, beta, beta*.
struct FkContext {
    TernaryTriple triple;

    std::int64_t qr_inv_p; // (q*r)^-1 mod p
    std::int64_t rp_inv_q; // (r*p)^-1 mod q
    std::int64_t pq_inv_r; // (p*q)^-1 mod r

    std::int64_t q_inv_p;  // q' = q^-1 mod p
    std::int64_t r_inv_p;  // r' = r^-1 mod p
    std::int64_t p_inv_q;  // p_q' = p^-1 mod q
    std::int64_t p_inv_r;  // p_r' = p^-1 mod r

    std::int64_t inv_max;  // M = max{q', r'}
    std::int64_t inv_min;  // m = min{q', r'}
    std::int64_t alpha;    // min{q', r', p-q', p-r'} = min{m, p-M}
    std::int64_t beta;     // alpha*beta*q*r == 1 (mod p), 0 < beta < p
    std::int64_t beta_star; // min{beta, p-beta}

    // F_k is defined exactly for window_lo < k < window_hi.
    std::int64_t window_lo; // -(qr + rp + pq)
    std::int64_t window_hi; // pqr

    // F_{k+1} - F_k keyed by which residues wrapped (a:4, b:2, c:1).
    std::array<FkValue, 8> f_step;

    std::int64_t p() const { return triple.p; }
    std::int64_t q() const { return triple.q; }
    std::int64_t r() const { return triple.r; }
    std::int64_t degree() const { return triple.degree(); }
    bool in_window(std::int64_t k) const { return window_lo < k && k < window_hi; }
};

FkContext make_context(const TernaryTriple& t);

// F_k = (a_k*qr + b_k*rp + c_k*pq - k) / (pqr), computed in exact integer
// arithmetic. Throws OutOfWindow outside (-(qr+rp+pq), pqr).
FkValue fk(const FkContext& ctx, std::int64_t k);

// F_lo, ..., F_hi via the incremental evaluator; equal to pointwise fk.
std::vector<FkValue> fk_range(const FkContext& ctx, std::int64_t lo, std::int64_t hi);

// F_k - F_{k-q} from the residues of k alone:
//   -1 if a_k < r' and c_k < p_r', +1 if a_k >= r' and c_k >= p_r', else 0.
int fk_diff_q(const FkContext& ctx, std::int64_t k);

// F_k - F_{k-r}: same with b_k, q', p_q' in place of c_k, r', p_r'.
int fk_diff_r(const FkContext& ctx, std::int64_t k);

// F_k - F_{k-q} - F_{k-r} + F_{k-q-r}, a function of a_k only:
// -1 on [M+m-p, m), +1 on [M, M+m), 0 elsewhere.
int fk_double_diff(const FkContext& ctx, std::int64_t k);

// F_k + F_{k-p-q} + F_{k-q-r} + F_{k-r-p}
//   == F_{k-p} + F_{k-q} + F_{k-r} + F_{k-p-q-r}.
bool check_octuple_identity(const FkContext& ctx, std::int64_t k);

// Walks F_k, F_{k+1}, ... in O(1) per step: each residue advances by a
// fixed increment with a conditional wrap, and F moves by the precomputed
// step for the wrap combination. The caller keeps k inside the window.
class FkStream {
public:
    FkStream(const FkContext& ctx, std::int64_t start_k);

    FkValue value() const { return f_; }

    void advance() {
        unsigned mask = 0;
        a_ += sa_; if (a_ >= p_) { a_ -= p_; mask |= 4; }
        b_ += sb_; if (b_ >= q_) { b_ -= q_; mask |= 2; }
        c_ += sc_; if (c_ >= r_) { c_ -= r_; mask |= 1; }
        f_ += steps_[mask];
    }

private:
    std::int64_t p_, q_, r_;
    std::int64_t sa_, sb_, sc_;
    std::array<FkValue, 8> steps_;
    std::int64_t a_, b_, c_;
    FkValue f_;
};

} // namespace cyclo
