#include "lamono/exact/dense_poly.hpp"

#include <map>

#include "lamono/error.hpp"

namespace lamono {

void trim(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

DensePoly dense_multiply(const DensePoly& a, const DensePoly& b) {
  if (a.empty() || b.empty()) return {};
  DensePoly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

std::pair<DensePoly, DensePoly> dense_divmod_monic(const DensePoly& dividend, const DensePoly& divisor) {
  if (divisor.empty() || divisor.back() != 1) {
    throw Error(ErrorCode::InternalError, "dense_divmod_monic needs a monic divisor");
  }
  DensePoly rem = dividend;
  trim(rem);
  if (rem.size() < divisor.size()) return {DensePoly{}, rem};
  const std::size_t dq = rem.size() - divisor.size();
  DensePoly quot(dq + 1, BigInt(0));
  for (std::size_t k = dq + 1; k-- > 0;) {
    const BigInt c = rem[k + divisor.size() - 1];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < divisor.size(); ++j) rem[k + j] -= c * divisor[j];
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

int dense_factor_multiplicity(DensePoly p, const DensePoly& factor) {
  trim(p);
  if (p.empty()) throw Error(ErrorCode::InternalError, "multiplicity of a factor in the zero polynomial");
  int count = 0;
  for (;;) {
    auto [q, r] = dense_divmod_monic(p, factor);
    if (!r.empty()) return count;
    p = std::move(q);
    ++count;
  }
}

DensePoly unity_binomial(std::int64_t m) {
  DensePoly p(static_cast<std::size_t>(m) + 1, BigInt(0));
  p.front() = -1;
  p.back() = 1;
  return p;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    small.push_back(i);
    if (i != n / i) large.push_back(n / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t totient(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

DensePoly cyclotomic_poly(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InternalError, "cyclotomic_poly needs n >= 1");
  // Divisors come out ascending, so every Phi_d needed below is already built.
  std::map<std::int64_t, DensePoly> built;
  for (std::int64_t d : divisors(n)) {
    DensePoly phi = unity_binomial(d);
    for (const auto& [e, phi_e] : built) {
      if (d % e == 0) phi = dense_divmod_monic(phi, phi_e).first;
    }
    built.emplace(d, std::move(phi));
  }
  return built.at(n);
}

}  // namespace lamono
