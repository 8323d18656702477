#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "cyclo/errors.hpp"

namespace cyclo {

using Rational = boost::rational<std::int64_t>;

// Bound parameters recomputed from a pair of inverse residue classes
// (q' = i, r' = j) mod p, without reference to any concrete q, r.
struct GridEntry {
    std::int64_t alpha, beta, beta_star;
    std::int64_t value; // min{2*alpha + beta*, p - beta*}
};
GridEntry grid_entry(std::int64_t p, std::int64_t i, std::int64_t j);

// (p-1) x (p-1) matrix of bound values over inverse residue classes,
// symmetric in (i, j) and under (i, j) -> (p-i, p-j).
struct ResidueGrid {
    std::int64_t p;
    std::vector<std::int32_t> values; // row-major, i, j = 1..p-1

    std::int32_t at(std::int64_t i, std::int64_t j) const {
        return values[static_cast<std::size_t>((i - 1) * (p - 1) + (j - 1))];
    }
};

ResidueGrid residue_grid(std::int64_t p);

// Mean of the grid entries as an exact rational; always <= (p+1)/2.
Rational grid_average(std::int64_t p);

// sum_{i=1}^{k} a(i, i + (p-1)/2 - k) next to its reference value
// (p+1)k/2. The reference is reported, not asserted.
struct AntidiagonalReport {
    std::int64_t k;
    std::int64_t sum;
    std::int64_t reference;   // (p+1)k/2
    std::int64_t discrepancy; // sum - reference
};
AntidiagonalReport antidiagonal_sum(std::int64_t p, std::int64_t k);

// Area of the limit polygon {0<x<1/2, 0<y<1/2, x<y, min{2x+y, 1-y} < c}:
// c^2/6 below 1/2, 1/8 - (3-4c)^2/12 on [1/2, 3/4), 1/8 beyond.
Rational closed_form_S(const Rational& c);

// Lower bound 8*S(c) on the fraction of classes with bound below c*p.
Rational density_lower_bound(const Rational& c);

struct DensitySummary {
    std::int64_t p;
    Rational c;
    Rational empirical_fraction; // #{(i,j) : a(i,j) < c*p} / (p-1)^2
    Rational closed_form_lower;  // 8*S(c)
};

// Strict comparison a(i,j) < c*p, evaluated in exact integers.
DensitySummary grid_density(std::int64_t p, const Rational& c);

// #{(i,j) : alpha + beta* < (p-1)/2}; always equals (p-3)(p-5)/2.
std::int64_t stronger_count(std::int64_t p);

} // namespace cyclo
