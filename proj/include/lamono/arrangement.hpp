#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lamono/exact/rational.hpp"

namespace lamono {

/// a*x + b*y + c = 0 over Q(i), kept in canonical form: the first nonzero
/// coefficient among (a, b) is 1.
class Line {
 public:
  /// Throws ParseError when a = b = 0.
  Line(GaussianRational a, GaussianRational b, GaussianRational c);

  const GaussianRational& a() const { return a_; }
  const GaussianRational& b() const { return b_; }
  const GaussianRational& c() const { return c_; }

  /// Two canonical lines are parallel iff their (a, b) agree.
  bool parallel_to(const Line& other) const { return a_ == other.a_ && b_ == other.b_; }

  GaussianRational evaluate(const GaussianRational& x, const GaussianRational& y) const {
    return a_ * x + b_ * y + c_;
  }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  GaussianRational a_, b_, c_;
};

/// Lexicographic on (a, b, c); canonical lines only.
std::strong_ordering compare(const Line& l, const Line& r);

/// A validated weighted affine line arrangement: pairwise distinct lines,
/// at least two directions, weights >= 1 with gcd 1.
class WeightedArrangement {
 public:
  /// Validates and throws DuplicateLine / NotEssential / BadWeight / BadGcd.
  WeightedArrangement(std::vector<Line> lines, std::vector<std::int64_t> weights);

  std::size_t size() const { return lines_.size(); }
  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  bool unweighted() const;

  /// Same lines, new weights (validated the same way).
  WeightedArrangement with_weights(std::vector<std::int64_t> weights) const;

 private:
  std::vector<Line> lines_;
  std::vector<std::int64_t> weights_;
};

/// Parses the arrangement JSON document:
///   {"lines": [{"a": COEF, "b": COEF, "c": COEF, "e": INT?}, ...]}
/// COEF is "p", "p/q", an integer literal, or {"re": R, "im": R}.
WeightedArrangement parse_arrangement(std::string_view document);

struct Point {
  GaussianRational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Vertex {
  Point point;
  std::vector<std::size_t> incident;  // ascending line indices
  std::int64_t multiplicity = 0;
  std::int64_t weight_sum = 0;
};

struct DirectionClass {
  GaussianRational dir_a, dir_b;  // canonical (a, b) shared by the members
  std::vector<std::size_t> members;
  std::int64_t count = 0;
  std::int64_t weight_sum = 0;
};

struct CombinatorialSummary {
  std::int64_t d = 0;
  std::int64_t d_e = 0;
  std::vector<std::int64_t> weights;
  std::vector<Vertex> vertices;           // sorted by point
  std::vector<DirectionClass> directions;  // sorted by direction
  std::map<std::int64_t, std::int64_t> histogram;  // m -> n_m
  std::vector<std::int64_t> line_vertex_counts;    // v_j
  std::vector<std::size_t> line_direction;         // line index -> direction index

  std::int64_t p() const { return static_cast<std::int64_t>(directions.size()); }
  bool unweighted() const;
};

CombinatorialSummary compute_combinatorics(const WeightedArrangement& arr);

/// Incidence data with the weights replaced; vertex and direction weight sums
/// and d_e are recomputed.
CombinatorialSummary reweight(const CombinatorialSummary& cs, std::span<const std::int64_t> weights);

}  // namespace lamono
