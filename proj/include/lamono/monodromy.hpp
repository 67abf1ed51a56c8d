#pragma once

#include <cstdint>
#include <vector>

#include "lamono/arrangement.hpp"
#include "lamono/exact/unity_poly.hpp"

namespace lamono {

// Characteristic polynomials of the monodromy on H^1 of the general fiber of
// f_e, stored as prod (t^m - 1)^{c_m}.

/// At infinity: (t-1) (t^{d_e}-1)^{p-2} prod_j (t^{d_e-d_j}-1)^{k_j-1}.
FactoredUnityPoly charpoly_infinity(const CombinatorialSummary& cs);

/// About the zero fiber, closed form:
/// (t-1) prod_lines (t^{e_j}-1)^{v_j-1} prod_vertices (t^{d(I_v)}-1)^{m_v-2}.
FactoredUnityPoly charpoly_zero_closed(const CombinatorialSummary& cs);

/// Unweighted closed form (t-1)^mu prod_m [(t-1)(t^m-1)^{m-2}]^{n_m}, from the
/// histogram only. Meaningful for all weights 1.
FactoredUnityPoly charpoly_zero_unweighted(const CombinatorialSummary& cs);

/// A stratum of the zero fiber X: either a vertex or an open line piece
/// H_j minus the other lines.
struct StratumDescriptor {
  enum class Kind { Vertex, OpenLinePiece };

  Kind kind = Kind::Vertex;
  std::int64_t weight = 0;        // d(I_v) for a vertex, e_j for a line piece
  std::int64_t multiplicity = 1;  // m_v for a vertex, 1 for a line piece
  std::int64_t euler = 1;         // 1 for a vertex, 1 - v_j for a line piece

  static StratumDescriptor vertex(std::int64_t weight_sum, std::int64_t multiplicity) {
    return {Kind::Vertex, weight_sum, multiplicity, 1};
  }
  static StratumDescriptor line_piece(std::int64_t weight, std::int64_t vertices_on_line) {
    return {Kind::OpenLinePiece, weight, 1, 1 - vertices_on_line};
  }
};

/// Zeta function of a monodromy, stored in the same carrier but read as
/// prod (1 - t^m)^{c_m}. The sign difference to (t^m - 1) is a unit and is
/// invisible after cyclotomic refactoring.
struct ZetaFunction {
  FactoredUnityPoly value;
  friend bool operator==(const ZetaFunction&, const ZetaFunction&) = default;
};

std::vector<StratumDescriptor> stratify_zero_fiber(const CombinatorialSummary& cs);

/// Local zeta function of f_e at a point of the stratum. A line piece is a
/// smooth point of multiplicity e: (1 - t^e). A vertex is a weighted-homogeneous
/// germ of degree D with m branches, whose Milnor fiber has Euler
/// characteristic D (2 - m): (1 - t^D)^{2-m}.
ZetaFunction local_zeta(const StratumDescriptor& s);

/// prod over strata S of Z(f_e, x_S)^{chi(S)}.
ZetaFunction zeta_at_zero(const CombinatorialSummary& cs);

/// det(Id - t M^1) = (1 - t) / Z, using that H^0 of the connected general
/// fiber contributes (1 - t). Throws NotPolynomial if the quotient has a
/// negative cyclotomic exponent.
FactoredUnityPoly charpoly_zero_from_zeta(const ZetaFunction& z);

}  // namespace lamono
