#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lamono/arrangement.hpp"
#include "lamono/exact/root_of_unity.hpp"
#include "lamono/exact/unity_poly.hpp"

namespace lamono {

/// Rank-one local system on the complement: lambda_j = exp(2 pi i e_j / N),
/// with N minimal, i.e. gcd(e_1, ..., e_d, N) = 1. A residue of 0 encodes a
/// trivial monodromy and is only produced in non-strict mode.
class LocalSystem {
 public:
  std::int64_t order() const { return order_; }
  const std::vector<std::int64_t>& residues() const { return residues_; }
  std::size_t size() const { return residues_.size(); }

  bool equimonodromic() const;
  bool all_nontrivial() const;

  /// gcd(e_1, ..., e_d) > 1 can happen even with N minimal, e.g. (2/3, 2/3).
  bool residue_gcd_exceeds_one() const;

  RootOfUnity monodromy(std::size_t j) const { return RootOfUnity(residues_.at(j), order_); }

  /// The eigenvalue a = exp(2 pi i / N) the bounds are taken at.
  RootOfUnity eigenvalue() const { return RootOfUnity::primitive(order_); }

  friend LocalSystem canonical_local_system(std::span<const RootOfUnity> monodromies, bool strict);

 private:
  std::int64_t order_ = 1;
  std::vector<std::int64_t> residues_;
};

/// N = lcm of the orders, e_j = k_j N / N_j. In strict mode a trivial
/// monodromy raises TrivialMonodromy.
LocalSystem canonical_local_system(std::span<const RootOfUnity> monodromies, bool strict = true);

/// The system exp(2 pi i r_j / order), brought to minimal order. Residues are
/// taken modulo `order`; zero residues are kept (flagged as trivial).
LocalSystem local_system_from_residues(std::int64_t order, std::span<const std::int64_t> residues);

/// lambda_j = exp(2 pi i / N) on all d lines.
LocalSystem equimonodromic_system(std::int64_t order, std::size_t d);

/// sum (m_v - 2) over affine vertices with N | d(I_v), the weights being the
/// residues of L. Throws TrivialMonodromy, LengthMismatch.
std::int64_t vertex_mult_zero(const CombinatorialSummary& cs, const LocalSystem& L);

/// sum (k_j - 1) over directions with N | d_e - d_j. Throws TrivialMonodromy,
/// LengthMismatch, and InfinityMonodromyTrivial when N | d_e.
std::int64_t vertex_mult_infinity(const CombinatorialSummary& cs, const LocalSystem& L);

struct BoundReport {
  RootOfUnity a;
  std::int64_t order = 1;
  std::vector<std::int64_t> residues;
  std::int64_t n_zero = 0;
  std::int64_t n_infinity = 0;
  std::int64_t bound = 0;
  std::int64_t vertex_sum_zero = 0;
  std::optional<std::int64_t> vertex_sum_infinity;
  bool all_lambda_nontrivial = false;
  bool normal_crossing_shortcut = false;
  bool residue_gcd_exceeds_one = false;
};

/// Upper bound on dim H^1 of the complement with coefficients in L:
/// min of the multiplicities of a in Delta_{e,0} and Delta_{e,inf}, with e the
/// residues of L. The vertex sums are cross-checked against the polynomial
/// multiplicities; a disagreement raises InternalError.
BoundReport h1_upper_bound(const WeightedArrangement& arr, const LocalSystem& L);
BoundReport h1_upper_bound(const CombinatorialSummary& cs, const LocalSystem& L);

/// gcd(Delta_0, Delta_inf) for the weights carried by cs.
CyclotomicExponents delta_f(const CombinatorialSummary& cs);

}  // namespace lamono
