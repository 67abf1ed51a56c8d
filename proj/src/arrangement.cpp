#include "lamono/arrangement.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

#include "lamono/error.hpp"

namespace lamono {

using nlohmann::json;

Line::Line(GaussianRational a, GaussianRational b, GaussianRational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  const GaussianRational lead = !a_.is_zero() ? a_ : b_;
  if (lead.is_zero()) throw Error(ErrorCode::ParseError, "line with a = b = 0 is not a line");
  a_ /= lead;
  b_ /= lead;
  c_ /= lead;
}

std::strong_ordering compare(const Line& l, const Line& r) {
  if (auto c = compare(l.a(), r.a()); c != 0) return c;
  if (auto c = compare(l.b(), r.b()); c != 0) return c;
  return compare(l.c(), r.c());
}

namespace {

std::strong_ordering compare_points(const Point& p, const Point& q) {
  if (auto c = compare(p.x, q.x); c != 0) return c;
  return compare(p.y, q.y);
}

void validate(const std::vector<Line>& lines, const std::vector<std::int64_t>& weights) {
  if (lines.size() != weights.size()) {
    throw Error(ErrorCode::LengthMismatch, "one weight per line is required");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1) {
      throw Error(ErrorCode::BadWeight, "weight of line " + std::to_string(i) + " is " +
                                            std::to_string(weights[i]) + ", must be >= 1");
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i] == lines[j]) {
        throw Error(ErrorCode::DuplicateLine,
                    "lines " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }
  bool two_directions = false;
  for (std::size_t i = 1; i < lines.size() && !two_directions; ++i) {
    two_directions = !lines[i].parallel_to(lines[0]);
  }
  if (!two_directions) throw Error(ErrorCode::NotEssential, "all lines are parallel (or fewer than two lines)");
  const std::int64_t g = std::accumulate(weights.begin(), weights.end(), std::int64_t{0},
                                         [](std::int64_t x, std::int64_t y) { return std::gcd(x, y); });
  if (g != 1) throw Error(ErrorCode::BadGcd, "gcd of the weights is " + std::to_string(g) + ", must be 1");
}

Rational parse_component(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) {
    // Exact integer literal; floating point is rejected below.
    return v.is_number_unsigned() ? Rational(BigInt(std::to_string(v.get<std::uint64_t>())))
                                  : Rational(BigInt(std::to_string(v.get<std::int64_t>())));
  }
  if (v.is_number_float()) throw Error(ErrorCode::ParseError, where + ": floating-point literals are not accepted");
  throw Error(ErrorCode::ParseError, where + ": expected a rational string");
}

GaussianRational parse_coefficient(const json& v, const std::string& where) {
  if (v.is_object()) {
    for (const auto& [key, _] : v.items()) {
      if (key != "re" && key != "im") throw Error(ErrorCode::ParseError, where + ": unknown key '" + key + "'");
    }
    Rational re = v.contains("re") ? parse_component(v.at("re"), where + ".re") : Rational(0);
    Rational im = v.contains("im") ? parse_component(v.at("im"), where + ".im") : Rational(0);
    return {std::move(re), std::move(im)};
  }
  return parse_component(v, where);
}

}  // namespace

WeightedArrangement::WeightedArrangement(std::vector<Line> lines, std::vector<std::int64_t> weights)
    : lines_(std::move(lines)), weights_(std::move(weights)) {
  validate(lines_, weights_);
}

bool WeightedArrangement::unweighted() const {
  return std::all_of(weights_.begin(), weights_.end(), [](std::int64_t e) { return e == 1; });
}

WeightedArrangement WeightedArrangement::with_weights(std::vector<std::int64_t> weights) const {
  return WeightedArrangement(lines_, std::move(weights));
}

WeightedArrangement parse_arrangement(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("lines") || !doc.at("lines").is_array()) {
    throw Error(ErrorCode::ParseError, "document must be an object with a \"lines\" array");
  }
  std::vector<Line> lines;
  std::vector<std::int64_t> weights;
  std::size_t index = 0;
  for (const json& entry : doc.at("lines")) {
    const std::string where = "lines[" + std::to_string(index++) + "]";
    if (!entry.is_object()) throw Error(ErrorCode::ParseError, where + " must be an object");
    for (const char* key : {"a", "b", "c"}) {
      if (!entry.contains(key)) throw Error(ErrorCode::ParseError, where + " is missing '" + key + "'");
    }
    for (const auto& [key, _] : entry.items()) {
      if (key != "a" && key != "b" && key != "c" && key != "e") {
        throw Error(ErrorCode::ParseError, where + ": unknown key '" + key + "'");
      }
    }
    std::int64_t e = 1;
    if (entry.contains("e")) {
      const json& w = entry.at("e");
      if (w.is_number_unsigned()) {
        e = static_cast<std::int64_t>(std::min<std::uint64_t>(w.get<std::uint64_t>(), INT64_MAX));
      } else if (w.is_number_integer()) {
        e = w.get<std::int64_t>();
      } else {
        throw Error(ErrorCode::ParseError, where + ".e must be an integer");
      }
    }
    lines.emplace_back(parse_coefficient(entry.at("a"), where + ".a"), parse_coefficient(entry.at("b"), where + ".b"),
                       parse_coefficient(entry.at("c"), where + ".c"));
    weights.push_back(e);
  }
  return WeightedArrangement(std::move(lines), std::move(weights));
}

bool CombinatorialSummary::unweighted() const {
  return std::all_of(weights.begin(), weights.end(), [](std::int64_t e) { return e == 1; });
}

CombinatorialSummary compute_combinatorics(const WeightedArrangement& arr) {
  const auto& lines = arr.lines();
  const std::size_t d = lines.size();

  CombinatorialSummary cs;
  cs.d = static_cast<std::int64_t>(d);
  cs.weights = arr.weights();

  // Exact pairwise intersections, grouped by point equality.
  std::vector<std::pair<Point, std::size_t>> hits;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Line& l = lines[i];
      const Line& r = lines[j];
      if (l.parallel_to(r)) continue;
      const GaussianRational det = l.a() * r.b() - r.a() * l.b();
      Point pt{(r.c() * l.b() - l.c() * r.b()) / det, (l.c() * r.a() - r.c() * l.a()) / det};
      if (!l.evaluate(pt.x, pt.y).is_zero() || !r.evaluate(pt.x, pt.y).is_zero()) {
        throw Error(ErrorCode::InternalError, "intersection point has a nonzero residual");
      }
      hits.emplace_back(pt, i);
      hits.emplace_back(std::move(pt), j);
    }
  }
  std::sort(hits.begin(), hits.end(), [](const auto& u, const auto& v) {
    if (auto c = compare_points(u.first, v.first); c != 0) return c < 0;
    return u.second < v.second;
  });
  for (std::size_t k = 0; k < hits.size();) {
    Vertex v;
    v.point = hits[k].first;
    for (; k < hits.size() && hits[k].first == v.point; ++k) {
      if (v.incident.empty() || v.incident.back() != hits[k].second) v.incident.push_back(hits[k].second);
    }
    v.multiplicity = static_cast<std::int64_t>(v.incident.size());
    cs.vertices.push_back(std::move(v));
  }

  // Direction classes keyed by the canonical (a, b).
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (auto c = compare(lines[i].a(), lines[j].a()); c != 0) return c < 0;
    return compare(lines[i].b(), lines[j].b()) < 0;
  });
  for (std::size_t k = 0; k < d;) {
    DirectionClass dc;
    dc.dir_a = lines[order[k]].a();
    dc.dir_b = lines[order[k]].b();
    for (; k < d && lines[order[k]].a() == dc.dir_a && lines[order[k]].b() == dc.dir_b; ++k) {
      dc.members.push_back(order[k]);
    }
    std::sort(dc.members.begin(), dc.members.end());
    dc.count = static_cast<std::int64_t>(dc.members.size());
    cs.directions.push_back(std::move(dc));
  }

  cs.line_vertex_counts.assign(d, 0);
  cs.line_direction.assign(d, 0);
  for (std::size_t j = 0; j < cs.directions.size(); ++j) {
    for (std::size_t i : cs.directions[j].members) cs.line_direction[i] = j;
  }
  for (const Vertex& v : cs.vertices) {
    cs.histogram[v.multiplicity] += 1;
    for (std::size_t i : v.incident) cs.line_vertex_counts[i] += 1;
  }
  return reweight(cs, cs.weights);
}

CombinatorialSummary reweight(const CombinatorialSummary& cs, std::span<const std::int64_t> weights) {
  if (weights.size() != static_cast<std::size_t>(cs.d)) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(cs.d) + " weights, got " +
                                               std::to_string(weights.size()));
  }
  CombinatorialSummary out = cs;
  out.weights.assign(weights.begin(), weights.end());
  out.d_e = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
  for (Vertex& v : out.vertices) {
    v.weight_sum = 0;
    for (std::size_t i : v.incident) v.weight_sum += weights[i];
  }
  for (DirectionClass& dc : out.directions) {
    dc.weight_sum = 0;
    for (std::size_t i : dc.members) dc.weight_sum += weights[i];
  }
  return out;
}

}  // namespace lamono
