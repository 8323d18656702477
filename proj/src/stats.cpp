#include "cyclo/stats.hpp"

#include <algorithm>
#include <string>

#include "cyclo/arith.hpp"

namespace cyclo {

namespace {

void require_odd_prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw Error("residue grid requires an odd prime, got " + std::to_string(p));
}

} // namespace

GridEntry grid_entry(std::int64_t p, std::int64_t i, std::int64_t j) {
    const std::int64_t m = std::min(i, j), big = std::max(i, j);
    const std::int64_t alpha = std::min(m, p - big);
    const std::int64_t beta = (big + m <= p) ? big : p - m;
    const std::int64_t beta_star = std::min(beta, p - beta);
    return {alpha, beta, beta_star, std::min(2 * alpha + beta_star, p - beta_star)};
}

ResidueGrid residue_grid(std::int64_t p) {
    require_odd_prime(p);
    ResidueGrid grid{p, {}};
    grid.values.resize(static_cast<std::size_t>((p - 1) * (p - 1)));
    for (std::int64_t i = 1; i < p; ++i)
        for (std::int64_t j = 1; j < p; ++j)
            grid.values[static_cast<std::size_t>((i - 1) * (p - 1) + (j - 1))] =
                static_cast<std::int32_t>(grid_entry(p, i, j).value);
    return grid;
}

Rational grid_average(std::int64_t p) {
    require_odd_prime(p);
    std::int64_t sum = 0;
    for (std::int64_t i = 1; i < p; ++i)
        for (std::int64_t j = 1; j < p; ++j)
            sum += grid_entry(p, i, j).value;
    const Rational average(sum, (p - 1) * (p - 1));
    if (average > Rational(p + 1, 2))
        throw BoundViolation("grid average exceeds (p+1)/2 at p=" + std::to_string(p));
    return average;
}

AntidiagonalReport antidiagonal_sum(std::int64_t p, std::int64_t k) {
    require_odd_prime(p);
    if (k < 0 || k > (p - 1) / 2)
        throw IndexOutOfRange("antidiagonal_sum: k=" + std::to_string(k) + " outside [0, " +
                              std::to_string((p - 1) / 2) + "]");
    std::int64_t sum = 0;
    for (std::int64_t i = 1; i <= k; ++i)
        sum += grid_entry(p, i, i + (p - 1) / 2 - k).value;
    const std::int64_t reference = (p + 1) * k / 2;
    return {k, sum, reference, sum - reference};
}

Rational closed_form_S(const Rational& c) {
    if (c <= Rational(0))
        throw NonPositiveThreshold("density threshold must be positive, got " +
                                   std::to_string(c.numerator()) + "/" +
                                   std::to_string(c.denominator()));
    if (c < Rational(1, 2)) return c * c / 6;
    if (c < Rational(3, 4)) {
        const Rational t = Rational(3) - Rational(4) * c;
        return Rational(1, 8) - t * t / 12;
    }
    return Rational(1, 8);
}

Rational density_lower_bound(const Rational& c) { return Rational(8) * closed_form_S(c); }

DensitySummary grid_density(std::int64_t p, const Rational& c) {
    require_odd_prime(p);
    const Rational lower = density_lower_bound(c); // validates c > 0
    std::int64_t count = 0;
    for (std::int64_t i = 1; i < p; ++i)
        for (std::int64_t j = 1; j < p; ++j) {
            // a(i,j) < c*p  <=>  a(i,j)*den < num*p
            const __int128 lhs = static_cast<__int128>(grid_entry(p, i, j).value) * c.denominator();
            const __int128 rhs = static_cast<__int128>(c.numerator()) * p;
            if (lhs < rhs) ++count;
        }
    return {p, c, Rational(count, (p - 1) * (p - 1)), lower};
}

std::int64_t stronger_count(std::int64_t p) {
    require_odd_prime(p);
    std::int64_t count = 0;
    for (std::int64_t i = 1; i < p; ++i)
        for (std::int64_t j = 1; j < p; ++j) {
            const GridEntry e = grid_entry(p, i, j);
            if (2 * (e.alpha + e.beta_star) < p - 1) ++count;
        }
    return count;
}

} // namespace cyclo
