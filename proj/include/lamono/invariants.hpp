#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lamono/arrangement.hpp"

namespace lamono {

struct InvariantReport {
  std::int64_t mu = 0;
  std::int64_t chi_complement = 0;
  std::int64_t b1_fiber = 0;
  std::optional<std::int64_t> genus;  // all weights 1 only
  std::int64_t dicritics = 0;
  std::int64_t b1_complement = 0;
  std::int64_t kaliman_lhs = 0;
  std::int64_t kaliman_rhs = 0;
  bool numbers_identity_holds = false;
  std::vector<std::int64_t> infinity_mu;  // one per direction class
};

/// Milnor number of the arrangement: 1 - d + sum_m n_m (m - 1). Equals the
/// Euler characteristic of the complement.
std::int64_t mu_arrangement(const CombinatorialSummary& cs);

/// First Betti number of the general fiber of f_e: 1 + d_e (d - 1) - sum_j d_j k_j.
std::int64_t betti1_general_fiber(const CombinatorialSummary& cs);

/// The same number for f itself, from the vertex histogram:
/// 1 - d + sum_m n_m (m - 1) m. Ignores the weights.
std::int64_t betti1_from_histogram(const CombinatorialSummary& cs);

/// Right-hand side of the multiple-point identity: (d - 1)^2 - sum_j k_j (k_j - 1).
std::int64_t betti1_from_directions(const CombinatorialSummary& cs);

/// Genus of a smooth projective model of the general fiber of f.
/// Throws WeightedNotSupported when some weight exceeds 1.
std::int64_t genus_general_fiber(const CombinatorialSummary& cs);

/// Milnor number of the closed general fiber at the point at infinity of
/// direction class j: d_e (d_j - k_j) + d_j (k_j - 2) + 1.
std::int64_t infinity_singularity_mu(const CombinatorialSummary& cs, std::size_t j);

InvariantReport invariant_report(const CombinatorialSummary& cs);
InvariantReport invariant_report(const WeightedArrangement& arr);

}  // namespace lamono
