#include "lamono/report.hpp"

namespace lamono {

Json to_json(const detail::ExponentMap& factors) {
  Json out = Json::object();
  for (const auto& [m, c] : factors.entries()) out[std::to_string(m)] = c;
  return out;
}

Json to_json(const DensePoly& coefficients) {
  Json out = Json::array();
  for (const BigInt& c : coefficients) {
    if (c.fits_slong_p()) {
      out.push_back(static_cast<std::int64_t>(c.get_si()));
    } else {
      out.push_back(c.get_str());
    }
  }
  return out;
}

Json to_json(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re);
  return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

Json to_json(const Line& line) { return Json{{"a", to_json(line.a())}, {"b", to_json(line.b())}, {"c", to_json(line.c())}}; }

Json to_json(const CombinatorialSummary& cs) {
  Json vertices = Json::array();
  for (const Vertex& v : cs.vertices) {
    vertices.push_back(Json{{"point", Json::array({to_json(v.point.x), to_json(v.point.y)})},
                            {"incident", v.incident},
                            {"multiplicity", v.multiplicity},
                            {"weightSum", v.weight_sum}});
  }
  Json directions = Json::array();
  for (const DirectionClass& dc : cs.directions) {
    directions.push_back(Json{{"direction", Json::array({to_json(dc.dir_a), to_json(dc.dir_b)})},
                              {"members", dc.members},
                              {"count", dc.count},
                              {"weightSum", dc.weight_sum}});
  }
  Json histogram = Json::object();
  for (const auto& [m, count] : cs.histogram) histogram[std::to_string(m)] = count;
  return Json{{"d", cs.d},
              {"d_e", cs.d_e},
              {"p", cs.p()},
              {"weights", cs.weights},
              {"vertices", std::move(vertices)},
              {"directions", std::move(directions)},
              {"histogram", std::move(histogram)},
              {"lineVertexCounts", cs.line_vertex_counts}};
}

Json to_json(const InvariantReport& r) {
  return Json{{"mu", r.mu},
              {"chiComplement", r.chi_complement},
              {"b1Fiber", r.b1_fiber},
              {"genus", r.genus ? Json(*r.genus) : Json(nullptr)},
              {"dicritics", r.dicritics},
              {"b1Complement", r.b1_complement},
              {"kalimanLHS", r.kaliman_lhs},
              {"kalimanRHS", r.kaliman_rhs},
              {"numbersIdentityHolds", r.numbers_identity_holds},
              {"infinityMu", r.infinity_mu}};
}

Json to_json(const BoundReport& r) {
  return Json{{"a", r.a.to_string()},
              {"order", r.order},
              {"residues", r.residues},
              {"N0", r.n_zero},
              {"NInfinity", r.n_infinity},
              {"bound", r.bound},
              {"vertexSumZero", r.vertex_sum_zero},
              {"vertexSumInfinity", r.vertex_sum_infinity ? Json(*r.vertex_sum_infinity) : Json(nullptr)},
              {"allLambdaNontrivial", r.all_lambda_nontrivial},
              {"normalCrossingShortcut", r.normal_crossing_shortcut},
              {"residueGcdExceedsOne", r.residue_gcd_exceeds_one}};
}

Json to_json(const VerificationSummary& v) {
  Json checks = Json::array();
  for (const CheckResult& c : v.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return Json{{"checks", std::move(checks)}, {"allPassed", v.all_passed()}};
}

Json zeta_to_json(const ZetaFunction& z) {
  Json num = Json::object();
  Json den = Json::object();
  for (const auto& [m, c] : z.value.entries()) {
    if (c > 0) num[std::to_string(m)] = c;
    else den[std::to_string(m)] = -c;
  }
  return Json{{"convention", "prod (1 - t^m)^c"}, {"numerator", std::move(num)}, {"denominator", std::move(den)}};
}

Json error_json(ErrorCode code, const std::string& message) {
  return Json{{"error", Json{{"code", std::string(to_string(code))}, {"message", message}}}};
}

}  // namespace lamono
