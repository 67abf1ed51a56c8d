#include "lamono/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lamono/error.hpp"
#include "lamono/invariants.hpp"
#include "lamono/monodromy.hpp"

namespace lamono {

bool VerificationSummary::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string pair_detail(std::int64_t lhs, std::int64_t rhs) {
  return std::to_string(lhs) + " vs " + std::to_string(rhs);
}

void run(VerificationSummary& out, std::string name, const std::function<CheckResult()>& body) {
  CheckResult r;
  try {
    r = body();
  } catch (const Error& ex) {
    r.passed = false;
    r.detail = ex.what();
  }
  r.name = std::move(name);
  out.checks.push_back(std::move(r));
}

}  // namespace

VerificationSummary verify_summary(const CombinatorialSummary& cs) {
  VerificationSummary out;

  run(out, "incidence_double_count", [&] {
    const std::int64_t by_lines =
        std::accumulate(cs.line_vertex_counts.begin(), cs.line_vertex_counts.end(), std::int64_t{0});
    std::int64_t by_vertices = 0;
    for (const auto& v : cs.vertices) by_vertices += v.multiplicity;
    std::int64_t by_histogram = 0;
    for (const auto& [m, count] : cs.histogram) by_histogram += m * count;
    return CheckResult{{}, by_lines == by_vertices && by_vertices == by_histogram,
                       std::to_string(by_lines) + ", " + std::to_string(by_vertices) + ", " +
                           std::to_string(by_histogram)};
  });

  run(out, "direction_partition", [&] {
    std::vector<int> seen(static_cast<std::size_t>(cs.d), 0);
    std::int64_t k_sum = 0, d_sum = 0;
    bool in_range = true;
    for (const auto& dc : cs.directions) {
      k_sum += dc.count;
      d_sum += dc.weight_sum;
      for (std::size_t i : dc.members) {
        if (i >= seen.size()) in_range = false;
        else seen[i] += 1;
      }
    }
    const bool partition = in_range && std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
    return CheckResult{{}, partition && k_sum == cs.d && d_sum == cs.d_e && cs.p() >= 2,
                       "sum k_j = " + std::to_string(k_sum) + ", sum d_j = " + std::to_string(d_sum)};
  });

  run(out, "multiple_point_identity", [&] {
    const std::int64_t lhs = betti1_from_histogram(cs);
    const std::int64_t rhs = betti1_from_directions(cs);
    return CheckResult{{}, lhs == rhs, pair_detail(lhs, rhs)};
  });

  if (cs.unweighted()) {
    run(out, "betti1_formulas_agree", [&] {
      const std::int64_t lhs = betti1_general_fiber(cs);
      const std::int64_t rhs = betti1_from_histogram(cs);
      return CheckResult{{}, lhs == rhs, pair_detail(lhs, rhs)};
    });
    run(out, "genus_nonnegative", [&] {
      const std::int64_t g = genus_general_fiber(cs);
      return CheckResult{{}, g >= 0, std::to_string(g)};
    });
  }

  run(out, "mu_nonnegative", [&] {
    const std::int64_t mu = mu_arrangement(cs);
    return CheckResult{{}, mu >= 0, std::to_string(mu)};
  });

  run(out, "degree_identity", [&] {
    const std::int64_t b1 = betti1_general_fiber(cs);
    const std::int64_t deg0 = fp_degree(charpoly_zero_closed(cs));
    const std::int64_t deg_inf = fp_degree(charpoly_infinity(cs));
    return CheckResult{{}, deg0 == b1 && deg_inf == b1,
                       "deg0 " + std::to_string(deg0) + ", deg_inf " + std::to_string(deg_inf) + ", b1 " +
                           std::to_string(b1)};
  });

  run(out, "root_one_multiplicity_at_infinity", [&] {
    const std::int64_t mult = fp_root_multiplicity(charpoly_infinity(cs), RootOfUnity(0, 1));
    return CheckResult{{}, mult == cs.d - 1, pair_detail(mult, cs.d - 1)};
  });

  run(out, "zeta_agreement", [&] {
    const CyclotomicExponents via_zeta = fp_to_cyclotomic(charpoly_zero_from_zeta(zeta_at_zero(cs)));
    const CyclotomicExponents closed = fp_to_cyclotomic(charpoly_zero_closed(cs));
    return CheckResult{{}, via_zeta == closed, "degrees " + pair_detail(via_zeta.degree(), closed.degree())};
  });

  if (cs.unweighted()) {
    run(out, "unweighted_closed_form", [&] {
      const CyclotomicExponents a = fp_to_cyclotomic(charpoly_zero_closed(cs));
      const CyclotomicExponents b = fp_to_cyclotomic(charpoly_zero_unweighted(cs));
      return CheckResult{{}, a == b, "degrees " + pair_detail(a.degree(), b.degree())};
    });
  }

  run(out, "nonnegative_exponents", [&] {
    const bool ok = charpoly_zero_closed(cs).all_nonnegative() && charpoly_infinity(cs).all_nonnegative();
    return CheckResult{{}, ok, ok ? "" : "negative factored exponent"};
  });

  run(out, "kaliman_equality", [&] {
    const InvariantReport r = invariant_report(cs);
    return CheckResult{{}, r.kaliman_lhs == r.kaliman_rhs && r.chi_complement == r.mu,
                       pair_detail(r.kaliman_lhs, r.kaliman_rhs)};
  });

  return out;
}

}  // namespace lamono
