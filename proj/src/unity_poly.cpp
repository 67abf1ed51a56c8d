#include "lamono/exact/unity_poly.hpp"

#include <algorithm>

#include "lamono/error.hpp"

namespace lamono {

namespace detail {

ExponentMap::ExponentMap(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init) {
  for (const auto& [k, v] : init) add(k, v);
}

ExponentMap::ExponentMap(const Map& raw) {
  for (const auto& [k, v] : raw) add(k, v);
}

void ExponentMap::add(std::int64_t key, std::int64_t delta) {
  if (key < 1) throw Error(ErrorCode::InternalError, "factor index must be positive");
  if (delta == 0) return;
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, delta);
    return;
  }
  it->second += delta;
  if (it->second == 0) entries_.erase(it);
}

std::int64_t ExponentMap::exponent(std::int64_t key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second;
}

bool ExponentMap::all_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.second > 0; });
}

}  // namespace detail

std::int64_t CyclotomicExponents::degree() const {
  std::int64_t deg = 0;
  for (const auto& [n, eps] : entries()) deg += totient(n) * eps;
  return deg;
}

FactoredUnityPoly fp_multiply(const FactoredUnityPoly& a, const FactoredUnityPoly& b) {
  FactoredUnityPoly out = a;
  for (const auto& [m, c] : b.entries()) out.add(m, c);
  return out;
}

FactoredUnityPoly fp_divide(const FactoredUnityPoly& a, const FactoredUnityPoly& b) {
  FactoredUnityPoly out = a;
  for (const auto& [m, c] : b.entries()) out.add(m, -c);
  return out;
}

std::int64_t fp_degree(const FactoredUnityPoly& a) {
  std::int64_t deg = 0;
  for (const auto& [m, c] : a.entries()) deg += m * c;
  return deg;
}

CyclotomicExponents fp_to_cyclotomic(const FactoredUnityPoly& a) {
  CyclotomicExponents out;
  for (const auto& [m, c] : a.entries()) {
    for (std::int64_t n : divisors(m)) out.add(n, c);
  }
  return out;
}

std::int64_t fp_root_multiplicity(const FactoredUnityPoly& a, const RootOfUnity& r) {
  std::int64_t mult = 0;
  for (const auto& [m, c] : a.entries()) {
    if (m % r.order() == 0) mult += c;
  }
  return mult;
}

CyclotomicExponents fp_gcd(const FactoredUnityPoly& a, const FactoredUnityPoly& b) {
  if (!a.all_nonnegative() || !b.all_nonnegative()) {
    throw Error(ErrorCode::NegativeExponent, "gcd is only defined for polynomial factorisations");
  }
  const CyclotomicExponents ca = fp_to_cyclotomic(a);
  const CyclotomicExponents cb = fp_to_cyclotomic(b);
  CyclotomicExponents out;
  for (const auto& [n, eps] : ca.entries()) out.add(n, std::min(eps, cb.exponent(n)));
  return out;
}

CyclotomicExponents cyc_add(const CyclotomicExponents& a, const CyclotomicExponents& b) {
  CyclotomicExponents out = a;
  for (const auto& [n, eps] : b.entries()) out.add(n, eps);
  return out;
}

DensePoly cyc_expand(const CyclotomicExponents& a) {
  if (!a.all_nonnegative()) {
    throw Error(ErrorCode::NotPolynomial, "negative cyclotomic exponent, result is a proper rational function");
  }
  DensePoly out{BigInt(1)};
  for (const auto& [n, eps] : a.entries()) {
    const DensePoly phi = cyclotomic_poly(n);
    for (std::int64_t i = 0; i < eps; ++i) out = dense_multiply(out, phi);
  }
  return out;
}

DensePoly fp_expand(const FactoredUnityPoly& a) { return cyc_expand(fp_to_cyclotomic(a)); }

}  // namespace lamono
