#include "lamono/localsys.hpp"

#include <algorithm>
#include <numeric>

#include "lamono/error.hpp"
#include "lamono/monodromy.hpp"

namespace lamono {

bool LocalSystem::equimonodromic() const {
  return std::adjacent_find(residues_.begin(), residues_.end(), std::not_equal_to<>()) == residues_.end();
}

bool LocalSystem::all_nontrivial() const {
  return std::none_of(residues_.begin(), residues_.end(), [](std::int64_t e) { return e == 0; });
}

bool LocalSystem::residue_gcd_exceeds_one() const {
  std::int64_t g = 0;
  for (std::int64_t e : residues_) g = std::gcd(g, e);
  return g > 1;
}

LocalSystem canonical_local_system(std::span<const RootOfUnity> monodromies, bool strict) {
  if (monodromies.empty()) throw Error(ErrorCode::LengthMismatch, "a local system needs at least one monodromy");
  LocalSystem L;
  for (const RootOfUnity& r : monodromies) {
    if (r.is_one() && strict) throw Error(ErrorCode::TrivialMonodromy, "some monodromy lambda_j equals 1");
    L.order_ = std::lcm(L.order_, r.order());
  }
  for (const RootOfUnity& r : monodromies) L.residues_.push_back(r.numerator() * (L.order_ / r.order()));
  return L;
}

LocalSystem local_system_from_residues(std::int64_t order, std::span<const std::int64_t> residues) {
  if (order < 1) throw Error(ErrorCode::ConfigError, "order must be >= 1");
  std::vector<RootOfUnity> roots;
  roots.reserve(residues.size());
  for (std::int64_t e : residues) roots.emplace_back(e, order);
  return canonical_local_system(roots, false);
}

LocalSystem equimonodromic_system(std::int64_t order, std::size_t d) {
  const std::vector<std::int64_t> ones(d, 1);
  return local_system_from_residues(order, ones);
}

namespace {

CombinatorialSummary residue_weighted(const CombinatorialSummary& cs, const LocalSystem& L) {
  if (L.size() != static_cast<std::size_t>(cs.d)) {
    throw Error(ErrorCode::LengthMismatch, "local system has " + std::to_string(L.size()) +
                                               " monodromies, arrangement has " + std::to_string(cs.d) + " lines");
  }
  if (!L.all_nontrivial()) throw Error(ErrorCode::TrivialMonodromy, "some monodromy lambda_j equals 1");
  return reweight(cs, L.residues());
}

}  // namespace

std::int64_t vertex_mult_zero(const CombinatorialSummary& cs, const LocalSystem& L) {
  const CombinatorialSummary w = residue_weighted(cs, L);
  std::int64_t sum = 0;
  for (const auto& v : w.vertices) {
    if (v.weight_sum % L.order() == 0) sum += v.multiplicity - 2;
  }
  return sum;
}

std::int64_t vertex_mult_infinity(const CombinatorialSummary& cs, const LocalSystem& L) {
  const CombinatorialSummary w = residue_weighted(cs, L);
  if (w.d_e % L.order() == 0) {
    throw Error(ErrorCode::InfinityMonodromyTrivial,
                "N = " + std::to_string(L.order()) + " divides d_e = " + std::to_string(w.d_e) +
                    ", the monodromy about the line at infinity is trivial");
  }
  std::int64_t sum = 0;
  for (const auto& dc : w.directions) {
    if ((w.d_e - dc.weight_sum) % L.order() == 0) sum += dc.count - 1;
  }
  return sum;
}

BoundReport h1_upper_bound(const CombinatorialSummary& cs, const LocalSystem& L) {
  const CombinatorialSummary w = residue_weighted(cs, L);
  BoundReport r;
  r.a = L.eigenvalue();
  r.order = L.order();
  r.residues = L.residues();
  r.all_lambda_nontrivial = true;
  r.residue_gcd_exceeds_one = L.residue_gcd_exceeds_one();

  r.n_zero = fp_root_multiplicity(charpoly_zero_closed(w), r.a);
  r.n_infinity = fp_root_multiplicity(charpoly_infinity(w), r.a);
  r.bound = std::min(r.n_zero, r.n_infinity);

  r.vertex_sum_zero = vertex_mult_zero(cs, L);
  if (r.vertex_sum_zero != r.n_zero) {
    throw Error(ErrorCode::InternalError, "vertex sum at zero disagrees with the polynomial multiplicity");
  }
  if (w.d_e % L.order() != 0) {
    r.vertex_sum_infinity = vertex_mult_infinity(cs, L);
    if (*r.vertex_sum_infinity != r.n_infinity) {
      throw Error(ErrorCode::InternalError, "vertex sum at infinity disagrees with the polynomial multiplicity");
    }
  }
  r.normal_crossing_shortcut = std::none_of(w.vertices.begin(), w.vertices.end(),
                                            [&](const Vertex& v) { return v.weight_sum % L.order() == 0; });
  return r;
}

BoundReport h1_upper_bound(const WeightedArrangement& arr, const LocalSystem& L) {
  return h1_upper_bound(compute_combinatorics(arr), L);
}

CyclotomicExponents delta_f(const CombinatorialSummary& cs) {
  return fp_gcd(charpoly_zero_closed(cs), charpoly_infinity(cs));
}

}  // namespace lamono
