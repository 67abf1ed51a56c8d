#include "doctest.h"

#include "lamono/census.hpp"
#include "lamono/error.hpp"
#include "lamono/localsys.hpp"
#include "lamono/monodromy.hpp"
#include "support.hpp"

using namespace lamono;
using namespace testing;

namespace {

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& ex) {
    return ex.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalError;
}

/// Multiplicity of exp(2 pi i / N) in the dense expansion, via the oracle.
int dense_mult(const FactoredUnityPoly& p, std::int64_t order) {
  return oracle::root_multiplicity(oracle::expand_factored(p.entries()), order);
}

}  // namespace

TEST_CASE("canonical_local_system") {
  {
    const std::vector<RootOfUnity> m{RootOfUnity(1, 4), RootOfUnity(1, 4), RootOfUnity(1, 2)};
    const auto L = canonical_local_system(m);
    CHECK(L.order() == 4);
    CHECK(L.residues() == std::vector<std::int64_t>{1, 1, 2});
    CHECK_FALSE(L.equimonodromic());
  }
  {
    const std::vector<RootOfUnity> m{RootOfUnity(2, 3), RootOfUnity(2, 3)};
    const auto L = canonical_local_system(m);
    CHECK(L.order() == 3);
    CHECK(L.residues() == std::vector<std::int64_t>{2, 2});
    CHECK(L.equimonodromic());
    CHECK(L.residue_gcd_exceeds_one());
  }
  {
    const std::vector<RootOfUnity> m{RootOfUnity(1, 2), RootOfUnity(1, 3)};
    const auto L = canonical_local_system(m);
    CHECK(L.order() == 6);
    CHECK(L.residues() == std::vector<std::int64_t>{3, 2});
  }
  const std::vector<RootOfUnity> trivial{RootOfUnity(1, 2), RootOfUnity(0, 1)};
  CHECK(error_of([&] { canonical_local_system(trivial); }) == ErrorCode::TrivialMonodromy);
  const auto lax = canonical_local_system(trivial, false);
  CHECK_FALSE(lax.all_nontrivial());
  CHECK(lax.residues() == std::vector<std::int64_t>{1, 0});
}

TEST_CASE("local_system_from_residues reduces to minimal order") {
  const std::vector<std::int64_t> r{2, 4};
  const auto L = local_system_from_residues(6, r);
  CHECK(L.order() == 3);
  CHECK(L.residues() == std::vector<std::int64_t>{1, 2});
  const auto E = equimonodromic_system(5, 3);
  CHECK(E.order() == 5);
  CHECK(E.residues() == std::vector<std::int64_t>{1, 1, 1});
}

TEST_CASE("vertex_mult_zero") {
  CHECK(vertex_mult_zero(compute_combinatorics(eight_lines()), equimonodromic_system(3, 8)) == 0);
  const std::vector<std::int64_t> w{1, 1, 2};
  CHECK(vertex_mult_zero(compute_combinatorics(weighted_triangle()), local_system_from_residues(4, w)) == 0);
  const auto star = make_arrangement({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  CHECK(vertex_mult_zero(compute_combinatorics(star), equimonodromic_system(3, 3)) == 1);
  const std::vector<std::int64_t> with_zero{1, 3, 1};
  CHECK(error_of([&] { vertex_mult_zero(compute_combinatorics(star), local_system_from_residues(3, with_zero)); }) ==
        ErrorCode::TrivialMonodromy);
  CHECK(error_of([&] { vertex_mult_zero(compute_combinatorics(star), equimonodromic_system(3, 4)); }) ==
        ErrorCode::LengthMismatch);
}

TEST_CASE("vertex_mult_infinity") {
  CHECK(vertex_mult_infinity(compute_combinatorics(eight_lines()), equimonodromic_system(3, 8)) == 4);
  CHECK(vertex_mult_infinity(compute_combinatorics(triangle()), equimonodromic_system(2, 3)) == 0);
  const std::vector<std::int64_t> w{1, 1, 2};
  CHECK(error_of([&] {
          vertex_mult_infinity(compute_combinatorics(weighted_triangle()), local_system_from_residues(4, w));
        }) == ErrorCode::InfinityMonodromyTrivial);
}

TEST_CASE("h1_upper_bound: eight-line example at a cube root") {
  const auto P = eight_lines();
  const auto cs = compute_combinatorics(P);
  REQUIRE(dense_mult(charpoly_zero_closed(cs), 3) == 0);
  REQUIRE(dense_mult(charpoly_infinity(cs), 3) == 4);
  const auto r = h1_upper_bound(P, equimonodromic_system(3, 8));
  CHECK(r.a == RootOfUnity(1, 3));
  CHECK(r.n_zero == 0);
  CHECK(r.n_infinity == 4);
  CHECK(r.bound == 0);
  CHECK(r.vertex_sum_zero == 0);
  CHECK(r.vertex_sum_infinity == 4);
  CHECK(r.normal_crossing_shortcut);
}

TEST_CASE("h1_upper_bound: weighted triangle at N = 4") {
  const auto W = weighted_triangle();
  const auto cs = compute_combinatorics(W);
  REQUIRE(dense_mult(charpoly_zero_closed(cs), 4) == 0);
  REQUIRE(dense_mult(charpoly_infinity(cs), 4) == 1);
  const std::vector<std::int64_t> w{1, 1, 2};
  const auto r = h1_upper_bound(triangle(), local_system_from_residues(4, w));
  CHECK(r.n_zero == 0);
  CHECK(r.n_infinity == 1);
  CHECK(r.bound == 0);
  CHECK_FALSE(r.vertex_sum_infinity.has_value());
}

TEST_CASE("h1_upper_bound: four lines with a triple point, infinity side tighter") {
  const auto A = concurrent4();
  const auto cs = compute_combinatorics(A);
  REQUIRE(dense_mult(charpoly_zero_closed(cs), 3) == 1);
  REQUIRE(dense_mult(charpoly_infinity(cs), 3) == 0);
  const auto r = h1_upper_bound(A, equimonodromic_system(3, 4));
  CHECK(r.n_zero == 1);
  CHECK(r.n_infinity == 0);
  CHECK(r.bound == 0);
  CHECK(r.vertex_sum_infinity == 0);
  CHECK_FALSE(r.normal_crossing_shortcut);
}

TEST_CASE("h1_upper_bound errors") {
  const std::vector<std::int64_t> trivial{1, 1, 0};
  CHECK(error_of([&] { h1_upper_bound(triangle(), local_system_from_residues(2, trivial)); }) ==
        ErrorCode::TrivialMonodromy);
  CHECK(error_of([&] { h1_upper_bound(triangle(), equimonodromic_system(3, 2)); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("delta_f") {
  CHECK(delta_f(compute_combinatorics(triangle())) == CyclotomicExponents{{1, 2}});
  CHECK(delta_f(compute_combinatorics(axes())) == CyclotomicExponents{{1, 1}});
  CHECK(delta_f(compute_combinatorics(eight_lines())).root_multiplicity(RootOfUnity(1, 3)) == 0);
  const auto cs = compute_combinatorics(triangle());
  CHECK(oracle::gcd(oracle::expand_factored(charpoly_zero_closed(cs).entries()),
                    oracle::expand_factored(charpoly_infinity(cs).entries())) ==
        to_oracle(cyc_expand(delta_f(cs))));
}

TEST_CASE("property: vertex sums agree with polynomial multiplicities") {
  SplitMix64 rng(31);
  int infinity_checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto arr = next_arrangement(rng, 10);
    const auto cs = compute_combinatorics(arr);
    const auto order = static_cast<std::int64_t>(2 + rng.uniform(11));
    std::vector<std::int64_t> residues(arr.size());
    for (auto& e : residues) e = 1 + static_cast<std::int64_t>(rng.uniform(static_cast<std::uint64_t>(order - 1)));
    const auto L = local_system_from_residues(order, residues);
    const auto w = reweight(cs, L.residues());
    const auto a = L.eigenvalue();
    CHECK(vertex_mult_zero(cs, L) == fp_root_multiplicity(charpoly_zero_closed(w), a));
    if (w.d_e % L.order() != 0) {
      ++infinity_checked;
      CHECK(vertex_mult_infinity(cs, L) == fp_root_multiplicity(charpoly_infinity(w), a));
    }
    const auto r = h1_upper_bound(cs, L);
    CHECK(r.bound == std::min(r.n_zero, r.n_infinity));
    CHECK(r.bound <= fp_degree(charpoly_zero_closed(w)));
  }
  CHECK(infinity_checked > 50);
}

TEST_CASE("property: equimonodromical sums from the histogram and direction sizes") {
  // all weights 1, lambda of order N with lambda^{d+1} = 1
  SplitMix64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const auto cs = compute_combinatorics(next_arrangement(rng, 12));
    for (std::int64_t n : divisors(cs.d + 1)) {
      if (n == 1) continue;
      const RootOfUnity lambda(1, n);
      std::int64_t at_infinity = 0;
      for (const auto& dc : cs.directions)
        if ((dc.count + 1) % n == 0) at_infinity += dc.count - 1;
      std::int64_t at_zero = 0;
      for (const auto& [m, count] : cs.histogram)
        if (m % n == 0) at_zero += count * (m - 2);
      CHECK(at_infinity == fp_root_multiplicity(charpoly_infinity(cs), lambda));
      CHECK(at_zero == fp_root_multiplicity(charpoly_zero_closed(cs), lambda));
    }
  }
}

TEST_CASE("property: Delta_f multiplicity is the minimum, orders up to 24") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const auto arr = next_arrangement(rng, 10);
    const auto cs = compute_combinatorics(arr.with_weights(random_weights(rng, arr.size(), 5)));
    const auto g = delta_f(cs);
    for (std::int64_t n = 2; n <= 24; ++n) {
      const RootOfUnity lambda(1, n);
      CHECK(g.root_multiplicity(lambda) == std::min(fp_root_multiplicity(charpoly_zero_closed(cs), lambda),
                                                    fp_root_multiplicity(charpoly_infinity(cs), lambda)));
    }
  }
}

TEST_CASE("bound vanishes on normal crossings when no pair sum is divisible") {
  SplitMix64 rng(61);
  int seen = 0;
  for (int trial = 0; trial < 200 && seen < 20; ++trial) {
    const auto cs = compute_combinatorics(next_arrangement(rng, 8));
    if (cs.histogram.size() != 1 || !cs.histogram.contains(2)) continue;
    // residues 1 give pair sums 2; N = 3 never divides them
    const auto r = h1_upper_bound(cs, equimonodromic_system(3, static_cast<std::size_t>(cs.d)));
    CHECK(r.bound == 0);
    CHECK(r.normal_crossing_shortcut);
    ++seen;
  }
  CHECK(seen > 0);
}
