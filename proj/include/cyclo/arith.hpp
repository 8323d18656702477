#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/errors.hpp"

namespace cyclo {

// Largest admissible p*q*r: keeps every intermediate of the form
// a_k*q*r + b_k*r*p + c_k*p*q inside signed 64-bit arithmetic.
inline constexpr std::int64_t kTripleProductCap = std::int64_t{1} << 40;

// Remainder in [0, m); works for negative a. Requires m > 0.
inline std::int64_t euclid_mod(std::int64_t a, std::int64_t m) {
    std::int64_t v = a % m;
    return v < 0 ? v + m : v;
}

// Floor division (rounds toward minus infinity). Requires b > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// (a * b) mod m, overflow-free, result in [0, m). Requires m > 0.
inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    __int128 v = static_cast<__int128>(a) * b % m;
    return euclid_mod(static_cast<std::int64_t>(v), m);
}

// Inverse of a modulo m, in [1, m). Throws NotInvertible when
// gcd(a, m) != 1 and InvalidModulus when m < 2.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Deterministic primality by trial division; exact for all n >= 0.
bool is_prime(std::int64_t n);

// Ascending list of all primes in [lo, hi].
std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi);

// Three pairwise distinct odd primes, normalized so p < q < r.
// The product is capped at kTripleProductCap.
struct TernaryTriple {
    std::int64_t p, q, r;

    TernaryTriple(std::int64_t a, std::int64_t b, std::int64_t c);

    std::int64_t product() const { return p * q * r; }
    std::int64_t degree() const { return (p - 1) * (q - 1) * (r - 1); }

    friend bool operator==(const TernaryTriple&, const TernaryTriple&) = default;
};

// Residues of k in the mixed-radix form
// k = a*q*r + b*r*p + c*p*q (mod p*q*r), with 0 <= a < p, 0 <= b < q,
// 0 <= c < r.
struct ResidueVector {
    std::int64_t a, b, c;
    friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
};

ResidueVector crt_residues(const TernaryTriple& t, std::int64_t k);

// All triples with product <= pqr_limit (and p <= p_max when p_max > 0),
// sorted by (p, q, r).
std::vector<TernaryTriple> enumerate_triples(std::int64_t pqr_limit,
                                             std::int64_t p_max = 0);

} // namespace cyclo
