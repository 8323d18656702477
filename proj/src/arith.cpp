#include "cyclo/arith.hpp"

#include <algorithm>
#include <string>

namespace cyclo {

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m < 2)
        throw InvalidModulus("mod_inverse: modulus must be >= 2, got " + std::to_string(m));
    std::int64_t a0 = euclid_mod(a, m);
    if (a0 == 0)
        throw NotInvertible("mod_inverse: " + std::to_string(a) + " is 0 mod " + std::to_string(m));
    std::int64_t old_r = a0, r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t quot = old_r / r;
        std::int64_t t = r;
        r = old_r - quot * r;
        old_r = t;
        t = s;
        s = old_s - quot * s;
        old_s = t;
    }
    if (old_r != 1)
        throw NotInvertible("mod_inverse: gcd(" + std::to_string(a0) + ", " + std::to_string(m) +
                            ") = " + std::to_string(old_r));
    return euclid_mod(old_s, m);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    if (hi < 2 || hi < lo) return out;
    lo = std::max<std::int64_t>(lo, 2);

    constexpr std::int64_t kSieveCap = std::int64_t{1} << 26;
    if (hi <= kSieveCap) {
        std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
        for (std::int64_t i = 2; i * i <= hi; ++i) {
            if (composite[static_cast<std::size_t>(i)]) continue;
            for (std::int64_t j = i * i; j <= hi; j += i)
                composite[static_cast<std::size_t>(j)] = true;
        }
        for (std::int64_t n = lo; n <= hi; ++n)
            if (!composite[static_cast<std::size_t>(n)]) out.push_back(n);
        return out;
    }
    for (std::int64_t n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

TernaryTriple::TernaryTriple(std::int64_t a, std::int64_t b, std::int64_t c) {
    std::int64_t v[3] = {a, b, c};
    std::sort(v, v + 3);
    p = v[0];
    q = v[1];
    r = v[2];
    auto bad = [](std::int64_t x) { return x < 3 || !is_prime(x); };
    if (bad(p) || bad(q) || bad(r))
        throw InvalidTriple("triple (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                            std::to_string(c) + "): all parts must be odd primes >= 3");
    if (p == q || q == r)
        throw InvalidTriple("triple (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                            std::to_string(c) + "): primes must be pairwise distinct");
    if (static_cast<__int128>(p) * q * r > kTripleProductCap)
        throw InvalidTriple("triple (" + std::to_string(p) + ", " + std::to_string(q) + ", " +
                            std::to_string(r) + "): product exceeds 2^40");
}

ResidueVector crt_residues(const TernaryTriple& t, std::int64_t k) {
    const std::int64_t qr_inv = mod_inverse(t.q * t.r, t.p);
    const std::int64_t rp_inv = mod_inverse(t.r * t.p, t.q);
    const std::int64_t pq_inv = mod_inverse(t.p * t.q, t.r);
    return {mul_mod(euclid_mod(k, t.p), qr_inv, t.p),
            mul_mod(euclid_mod(k, t.q), rp_inv, t.q),
            mul_mod(euclid_mod(k, t.r), pq_inv, t.r)};
}

std::vector<TernaryTriple> enumerate_triples(std::int64_t pqr_limit, std::int64_t p_max) {
    std::vector<TernaryTriple> out;
    if (pqr_limit < 3 * 5 * 7) return out;
    const auto primes = primes_in(3, pqr_limit / 15);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::int64_t p = primes[i];
        if (p * p * p > pqr_limit) break;
        if (p_max > 0 && p > p_max) break;
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            const std::int64_t q = primes[j];
            if (p * q * q > pqr_limit) break;
            for (std::size_t k = j + 1; k < primes.size(); ++k) {
                const std::int64_t r = primes[k];
                if (p * q * r > pqr_limit) break;
                out.emplace_back(p, q, r);
            }
        }
    }
    return out;
}

} // namespace cyclo
