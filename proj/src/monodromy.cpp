#include "lamono/monodromy.hpp"

#include "lamono/error.hpp"
#include "lamono/invariants.hpp"

namespace lamono {

FactoredUnityPoly charpoly_infinity(const CombinatorialSummary& cs) {
  FactoredUnityPoly out{{1, 1}};
  out.add(cs.d_e, cs.p() - 2);
  for (const auto& dc : cs.directions) {
    if (dc.count >= 2 && cs.d_e > dc.weight_sum) out.add(cs.d_e - dc.weight_sum, dc.count - 1);
  }
  return out;
}

FactoredUnityPoly charpoly_zero_closed(const CombinatorialSummary& cs) {
  FactoredUnityPoly out{{1, 1}};
  for (std::size_t j = 0; j < cs.weights.size(); ++j) out.add(cs.weights[j], cs.line_vertex_counts[j] - 1);
  for (const auto& v : cs.vertices) out.add(v.weight_sum, v.multiplicity - 2);
  return out;
}

FactoredUnityPoly charpoly_zero_unweighted(const CombinatorialSummary& cs) {
  FactoredUnityPoly out;
  out.add(1, mu_arrangement(cs));
  for (const auto& [m, count] : cs.histogram) {
    out.add(1, count);
    out.add(m, (m - 2) * count);
  }
  return out;
}

std::vector<StratumDescriptor> stratify_zero_fiber(const CombinatorialSummary& cs) {
  std::vector<StratumDescriptor> strata;
  strata.reserve(cs.vertices.size() + cs.weights.size());
  for (const auto& v : cs.vertices) strata.push_back(StratumDescriptor::vertex(v.weight_sum, v.multiplicity));
  for (std::size_t j = 0; j < cs.weights.size(); ++j) {
    strata.push_back(StratumDescriptor::line_piece(cs.weights[j], cs.line_vertex_counts[j]));
  }
  return strata;
}

ZetaFunction local_zeta(const StratumDescriptor& s) {
  switch (s.kind) {
    case StratumDescriptor::Kind::OpenLinePiece:
      return {FactoredUnityPoly{{s.weight, 1}}};
    case StratumDescriptor::Kind::Vertex: {
      // chi(Milnor fiber) / D = 2 - m
      const std::int64_t chi = s.weight * (2 - s.multiplicity);
      if (chi % s.weight != 0) throw Error(ErrorCode::InternalError, "vertex zeta exponent is not integral");
      return {FactoredUnityPoly{{s.weight, chi / s.weight}}};
    }
  }
  throw Error(ErrorCode::InternalError, "unknown stratum kind");
}

ZetaFunction zeta_at_zero(const CombinatorialSummary& cs) {
  ZetaFunction z;
  for (const auto& s : stratify_zero_fiber(cs)) {
    const ZetaFunction local = local_zeta(s);
    for (const auto& [m, c] : local.value.entries()) z.value.add(m, c * s.euler);
  }
  return z;
}

FactoredUnityPoly charpoly_zero_from_zeta(const ZetaFunction& z) {
  FactoredUnityPoly det = fp_divide(FactoredUnityPoly{{1, 1}}, z.value);
  if (!fp_to_cyclotomic(det).all_nonnegative()) {
    throw Error(ErrorCode::NotPolynomial, "(1 - t) / Z is not a polynomial");
  }
  return det;
}

}  // namespace lamono
