#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>

#include "lamono/exact/dense_poly.hpp"
#include "lamono/exact/root_of_unity.hpp"

namespace lamono {

namespace detail {

/// Sparse map from a positive integer key to a nonzero integer exponent.
/// Zero exponents are never stored, so structural equality is value equality.
class ExponentMap {
 public:
  using Map = std::map<std::int64_t, std::int64_t>;

  ExponentMap() = default;
  ExponentMap(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init);
  explicit ExponentMap(const Map& raw);

  /// Adds `delta` to the exponent at `key`, dropping the entry if it hits zero.
  void add(std::int64_t key, std::int64_t delta);
  std::int64_t exponent(std::int64_t key) const;

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool all_nonnegative() const;

  friend bool operator==(const ExponentMap&, const ExponentMap&) = default;

 private:
  Map entries_;
};

}  // namespace detail

/// prod_N Phi_N(t)^{eps_N}.
class CyclotomicExponents : public detail::ExponentMap {
 public:
  using ExponentMap::ExponentMap;

  /// sum_N phi(N) * eps_N.
  std::int64_t degree() const;

  /// Multiplicity of a root of unity of the given order (eps_N itself).
  std::int64_t root_multiplicity(const RootOfUnity& r) const { return exponent(r.order()); }

  friend bool operator==(const CyclotomicExponents&, const CyclotomicExponents&) = default;
};

/// prod_m (t^m - 1)^{c_m}, the carrier for every characteristic polynomial and
/// zeta function in the library. Exponents may be negative.
class FactoredUnityPoly : public detail::ExponentMap {
 public:
  using ExponentMap::ExponentMap;

  friend bool operator==(const FactoredUnityPoly&, const FactoredUnityPoly&) = default;
};

FactoredUnityPoly fp_multiply(const FactoredUnityPoly& a, const FactoredUnityPoly& b);

/// a / b, i.e. a times b with negated exponents.
FactoredUnityPoly fp_divide(const FactoredUnityPoly& a, const FactoredUnityPoly& b);

/// sum_m m * c_m.
std::int64_t fp_degree(const FactoredUnityPoly& a);

/// eps_N = sum over stored m with N | m of c_m.
CyclotomicExponents fp_to_cyclotomic(const FactoredUnityPoly& a);

/// sum over stored m divisible by the order of r of c_m. This is the root
/// multiplicity whenever the product is a polynomial.
std::int64_t fp_root_multiplicity(const FactoredUnityPoly& a, const RootOfUnity& r);

/// Entrywise minimum of the cyclotomic vectors. Throws NegativeExponent if
/// either argument has a negative factored exponent.
CyclotomicExponents fp_gcd(const FactoredUnityPoly& a, const FactoredUnityPoly& b);

/// Dense expansion. Throws NotPolynomial if some cyclotomic exponent is negative.
DensePoly fp_expand(const FactoredUnityPoly& a);

CyclotomicExponents cyc_add(const CyclotomicExponents& a, const CyclotomicExponents& b);

/// Dense expansion of prod Phi_N^{eps_N}. Throws NotPolynomial on negative entries.
DensePoly cyc_expand(const CyclotomicExponents& a);

}  // namespace lamono
