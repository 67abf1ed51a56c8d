#include "lamono/invariants.hpp"

#include "lamono/error.hpp"

namespace lamono {

namespace {

std::int64_t exact_half(std::int64_t value, const char* what) {
  if (value % 2 != 0) throw Error(ErrorCode::InternalError, std::string(what) + " is odd, expected an even number");
  return value / 2;
}

}  // namespace

std::int64_t mu_arrangement(const CombinatorialSummary& cs) {
  std::int64_t mu = 1 - cs.d;
  for (const auto& [m, count] : cs.histogram) mu += count * (m - 1);
  return mu;
}

std::int64_t betti1_general_fiber(const CombinatorialSummary& cs) {
  std::int64_t b1 = 1 + cs.d_e * (cs.d - 1);
  for (const auto& dc : cs.directions) b1 -= dc.weight_sum * dc.count;
  return b1;
}

std::int64_t betti1_from_histogram(const CombinatorialSummary& cs) {
  std::int64_t b1 = 1 - cs.d;
  for (const auto& [m, count] : cs.histogram) b1 += count * (m - 1) * m;
  return b1;
}

std::int64_t betti1_from_directions(const CombinatorialSummary& cs) {
  std::int64_t b1 = (cs.d - 1) * (cs.d - 1);
  for (const auto& dc : cs.directions) b1 -= dc.count * (dc.count - 1);
  return b1;
}

std::int64_t genus_general_fiber(const CombinatorialSummary& cs) {
  if (!cs.unweighted()) {
    throw Error(ErrorCode::WeightedNotSupported, "the genus formula is only available for all weights equal to 1");
  }
  std::int64_t g = exact_half((cs.d - 1) * (cs.d - 2), "(d-1)(d-2)");
  for (const auto& dc : cs.directions) g -= exact_half(dc.count * (dc.count - 1), "k(k-1)");
  if (g < 0) throw Error(ErrorCode::InternalError, "negative genus");
  return g;
}

std::int64_t infinity_singularity_mu(const CombinatorialSummary& cs, std::size_t j) {
  const DirectionClass& dc = cs.directions.at(j);
  return cs.d_e * (dc.weight_sum - dc.count) + dc.weight_sum * (dc.count - 2) + 1;
}

InvariantReport invariant_report(const CombinatorialSummary& cs) {
  InvariantReport r;
  r.mu = mu_arrangement(cs);
  r.chi_complement = r.mu;
  r.b1_fiber = betti1_general_fiber(cs);
  if (cs.unweighted()) r.genus = genus_general_fiber(cs);

  // One dicritic per line: each point at infinity A_j carries k_j of them.
  r.dicritics = 0;
  for (const auto& dc : cs.directions) r.dicritics += dc.count;
  r.b1_complement = cs.d;

  // Kaliman: delta - 1 against sum_t (n(F_t) - 1). Only F_0 = X is reducible,
  // with d components.
  r.kaliman_lhs = r.dicritics - 1;
  r.kaliman_rhs = cs.d - 1;

  r.numbers_identity_holds = betti1_from_histogram(cs) == betti1_from_directions(cs);
  for (std::size_t j = 0; j < cs.directions.size(); ++j) r.infinity_mu.push_back(infinity_singularity_mu(cs, j));
  return r;
}

InvariantReport invariant_report(const WeightedArrangement& arr) { return invariant_report(compute_combinatorics(arr)); }

}  // namespace lamono
