#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lamono/exact/rational.hpp"

namespace lamono {

/// Dense integer polynomial, ascending coefficients. Trailing zeros are trimmed
/// by every function here, so the zero polynomial is the empty vector.
using DensePoly = std::vector<BigInt>;

void trim(DensePoly& p);

DensePoly dense_multiply(const DensePoly& a, const DensePoly& b);

/// Division by a monic divisor; stays inside Z[t].
std::pair<DensePoly, DensePoly> dense_divmod_monic(const DensePoly& dividend, const DensePoly& divisor);

/// Number of times `factor` (monic, irreducible) divides `p`. p must be nonzero.
int dense_factor_multiplicity(DensePoly p, const DensePoly& factor);

/// t^m - 1.
DensePoly unity_binomial(std::int64_t m);

/// The n-th cyclotomic polynomial, by exact division of t^n - 1 by all
/// Phi_d with d | n, d < n.
DensePoly cyclotomic_poly(std::int64_t n);

/// Ascending list of positive divisors.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Euler's totient.
std::int64_t totient(std::int64_t n);

}  // namespace lamono
