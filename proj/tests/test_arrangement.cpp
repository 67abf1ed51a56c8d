#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "lamono/arrangement.hpp"
#include "lamono/census.hpp"
#include "lamono/error.hpp"
#include "support.hpp"

using namespace lamono;
using namespace testing;

namespace {

ErrorCode parse_error_code(const std::string& doc) {
  try {
    parse_arrangement(doc);
  } catch (const Error& ex) {
    return ex.code();
  }
  FAIL("document parsed but should not have");
  return ErrorCode::InternalError;
}

std::multiset<std::int64_t> k_multiset(const CombinatorialSummary& cs) {
  std::multiset<std::int64_t> out;
  for (const auto& dc : cs.directions) out.insert(dc.count);
  return out;
}

}  // namespace

TEST_CASE("line canonical form") {
  const Line l(GaussianRational(2), GaussianRational(4), GaussianRational(-6));
  CHECK(l.a() == GaussianRational(1));
  CHECK(l.b() == GaussianRational(2));
  CHECK(l.c() == GaussianRational(-3));
  const Line vertical(GaussianRational(0), GaussianRational(Rational(1, 3)), GaussianRational(1));
  CHECK(vertical.b() == GaussianRational(1));
  CHECK(vertical.c() == GaussianRational(3));
  const Line complex(GaussianRational(0, 2), GaussianRational(1), GaussianRational(0));
  CHECK(complex.a() == GaussianRational(1));
  CHECK(complex.b() == GaussianRational(0, Rational(-1, 2)));
  CHECK_THROWS_AS(Line(GaussianRational(0), GaussianRational(0), GaussianRational(1)), Error);
}

TEST_CASE("parse_arrangement fixtures") {
  const auto t = parse_arrangement(read_fixture("triangle.json"));
  CHECK(t.size() == 3);
  CHECK(t.unweighted());
  const auto w = parse_arrangement(read_fixture("weighted_triangle.json"));
  CHECK(w.weights() == std::vector<std::int64_t>{1, 1, 2});
  const auto g = parse_arrangement(read_fixture("gaussian.json"));
  CHECK(g.size() == 4);
  CHECK(g.weights().back() == 3);
}

TEST_CASE("parse_arrangement errors") {
  CHECK(parse_error_code(read_fixture("duplicate.json")) == ErrorCode::DuplicateLine);
  CHECK(parse_error_code(read_fixture("parallel.json")) == ErrorCode::NotEssential);
  CHECK(parse_error_code(read_fixture("float_literal.json")) == ErrorCode::ParseError);
  CHECK(parse_error_code(R"({"lines": [{"a":"1","b":"0","c":"0","e":0},{"a":"0","b":"1","c":"0"}]})") ==
        ErrorCode::BadWeight);
  CHECK(parse_error_code(R"({"lines": [{"a":"1","b":"0","c":"0","e":2},{"a":"0","b":"1","c":"0","e":4}]})") ==
        ErrorCode::BadGcd);
  CHECK(parse_error_code(R"({"lines": [{"a":"1","b":"0","c":"0"}]})") == ErrorCode::NotEssential);
  CHECK(parse_error_code(R"({"lines": []})") == ErrorCode::NotEssential);
  CHECK(parse_error_code(R"({"lines": [{"a":"0","b":"0","c":"1"},{"a":"0","b":"1","c":"0"}]})") ==
        ErrorCode::ParseError);
  CHECK(parse_error_code(R"({"lines": [{"a":"1","b":"0"}]})") == ErrorCode::ParseError);
  CHECK(parse_error_code(R"({"lines": [{"a":"1","b":"0","c":"0","e":1.0}]})") == ErrorCode::ParseError);
  CHECK(parse_error_code(R"({"lines": [{"a":"1","b":"0","c":"0","w":1}]})") == ErrorCode::ParseError);
  CHECK(parse_error_code(R"({"lines": [)") == ErrorCode::ParseError);
  CHECK(parse_error_code(R"([1, 2])") == ErrorCode::ParseError);
  // x = 0 and 2x = 0 written with Gaussian coefficients
  CHECK(parse_error_code(R"({"lines": [{"a":"1","b":"0","c":"0"},{"a":{"re":"0","im":"2"},"b":"0","c":"0"},
                                       {"a":"0","b":"1","c":"0"}]})") == ErrorCode::DuplicateLine);
}

TEST_CASE("integer literals are accepted as exact coefficients") {
  const auto arr = parse_arrangement(R"({"lines": [{"a":1,"b":0,"c":-3},{"a":0,"b":1,"c":0}]})");
  CHECK(arr.lines()[0].c() == GaussianRational(-3));
}

TEST_CASE("compute_combinatorics: triangle against brute force") {
  const auto cs = compute_combinatorics(triangle());
  const auto brute = oracle::brute_force(to_oracle(triangle()));
  REQUIRE(brute.histogram == std::map<std::int64_t, std::int64_t>{{2, 3}});
  CHECK(cs.d == 3);
  CHECK(cs.p() == 3);
  CHECK(k_multiset(cs) == std::multiset<std::int64_t>{1, 1, 1});
  CHECK(cs.histogram == brute.histogram);
  CHECK(cs.line_vertex_counts == std::vector<std::int64_t>{2, 2, 2});
}

TEST_CASE("compute_combinatorics: axes") {
  const auto cs = compute_combinatorics(axes());
  CHECK(cs.d == 2);
  CHECK(cs.p() == 2);
  CHECK(cs.histogram == std::map<std::int64_t, std::int64_t>{{2, 1}});
  CHECK(cs.line_vertex_counts == std::vector<std::int64_t>{1, 1});
  REQUIRE(cs.vertices.size() == 1);
  CHECK(cs.vertices[0].point == Point{GaussianRational(0), GaussianRational(0)});
}

TEST_CASE("compute_combinatorics: eight-line example has only double points") {
  const auto cs = compute_combinatorics(eight_lines());
  const auto brute = oracle::brute_force(to_oracle(eight_lines()));
  REQUIRE(brute.histogram == std::map<std::int64_t, std::int64_t>{{2, 24}});
  REQUIRE(brute.directions == 4);
  CHECK(cs.d == 8);
  CHECK(cs.p() == 4);
  CHECK(k_multiset(cs) == std::multiset<std::int64_t>{2, 2, 2, 2});
  CHECK(cs.histogram == brute.histogram);
  CHECK(cs.vertices.size() == 24);
}

TEST_CASE("compute_combinatorics: weighted sums") {
  const auto cs = compute_combinatorics(weighted_triangle());
  CHECK(cs.d_e == 4);
  std::vector<std::int64_t> sums;
  for (const auto& v : cs.vertices) sums.push_back(v.weight_sum);
  std::sort(sums.begin(), sums.end());
  CHECK(sums == std::vector<std::int64_t>{2, 3, 3});
}

TEST_CASE("compute_combinatorics: non-real Gaussian arrangement") {
  // x, y, x + i y, 2i x + y/2 - 3 + i/3 (weight 3)
  const auto cs = compute_combinatorics(parse_arrangement(read_fixture("gaussian.json")));
  CHECK(cs.d == 4);
  CHECK(cs.p() == 4);
  // the first three are concurrent at the origin
  CHECK(cs.histogram == std::map<std::int64_t, std::int64_t>{{2, 3}, {3, 1}});
  CHECK(cs.d_e == 6);
  const auto arr = parse_arrangement(read_fixture("gaussian.json"));
  for (const auto& v : cs.vertices) {
    for (std::size_t i : v.incident) {
      CHECK(arr.lines()[i].evaluate(v.point.x, v.point.y).is_zero());
    }
  }
}

TEST_CASE("property: incidence, partition and brute-force agreement on random arrangements") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto arr = next_arrangement(rng, 10);
    const auto cs = compute_combinatorics(arr);
    const auto brute = oracle::brute_force(to_oracle(arr));
    CHECK(cs.histogram == brute.histogram);
    CHECK(cs.line_vertex_counts == brute.vertices_per_line);
    CHECK(cs.p() == brute.directions);

    const auto by_lines = std::accumulate(cs.line_vertex_counts.begin(), cs.line_vertex_counts.end(), std::int64_t{0});
    std::int64_t by_hist = 0;
    for (const auto& [m, n] : cs.histogram) by_hist += m * n;
    CHECK(by_lines == by_hist);

    std::int64_t k_sum = 0, d_sum = 0;
    for (const auto& dc : cs.directions) {
      k_sum += dc.count;
      d_sum += dc.weight_sum;
    }
    CHECK(k_sum == cs.d);
    CHECK(d_sum == cs.d_e);
  }
}

TEST_CASE("property: permutation invariance") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto arr = next_arrangement(rng, 9);
    auto weights = random_weights(rng, arr.size(), 4);
    const auto base = compute_combinatorics(arr.with_weights(weights));

    std::vector<std::size_t> perm(arr.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(i)]);
    std::vector<Line> lines;
    std::vector<std::int64_t> w;
    for (std::size_t i : perm) {
      lines.push_back(arr.lines()[i]);
      w.push_back(weights[i]);
    }
    const auto shuffled = compute_combinatorics(WeightedArrangement(lines, w));

    CHECK(shuffled.histogram == base.histogram);
    CHECK(shuffled.d_e == base.d_e);
    REQUIRE(shuffled.vertices.size() == base.vertices.size());
    for (std::size_t v = 0; v < base.vertices.size(); ++v) {
      CHECK(shuffled.vertices[v].point == base.vertices[v].point);
      CHECK(shuffled.vertices[v].weight_sum == base.vertices[v].weight_sum);
    }
    REQUIRE(shuffled.directions.size() == base.directions.size());
    for (std::size_t j = 0; j < base.directions.size(); ++j) {
      CHECK(shuffled.directions[j].count == base.directions[j].count);
      CHECK(shuffled.directions[j].weight_sum == base.directions[j].weight_sum);
    }
    for (std::size_t k = 0; k < perm.size(); ++k) {
      CHECK(shuffled.line_vertex_counts[k] == base.line_vertex_counts[perm[k]]);
    }
  }
}

TEST_CASE("property: affine maps preserve the multiple-point histogram") {
  // Substitute (x, y) -> M (x, y) + t with M in GL2(Q(i)); a line a.x + c
  // becomes (a M) . x + (a . t + c).
  SplitMix64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const auto arr = next_arrangement(rng, 8);
    const GaussianRational m11(Rational(1 + static_cast<long>(rng.uniform(3))), Rational(static_cast<long>(rng.uniform(2))));
    const GaussianRational m12(static_cast<long>(rng.uniform(3)) - 1);
    const GaussianRational m21(static_cast<long>(rng.uniform(3)) - 1);
    const GaussianRational m22(Rational(1), Rational(1 + static_cast<long>(rng.uniform(2))));
    if ((m11 * m22 - m12 * m21).is_zero()) continue;
    const GaussianRational t1(static_cast<long>(rng.uniform(7)) - 3);
    const GaussianRational t2(Rational(0), Rational(static_cast<long>(rng.uniform(5)) - 2));
    const bool linear = trial % 2 == 0;

    std::vector<Line> mapped;
    for (const Line& l : arr.lines()) {
      GaussianRational c = l.c();
      if (!linear) c += l.a() * t1 + l.b() * t2;
      mapped.emplace_back(l.a() * m11 + l.b() * m21, l.a() * m12 + l.b() * m22, c);
    }
    const auto before = compute_combinatorics(arr);
    const auto after = compute_combinatorics(WeightedArrangement(mapped, arr.weights()));
    CHECK(after.histogram == before.histogram);
    CHECK(after.p() == before.p());
    CHECK(k_multiset(after) == k_multiset(before));
    CHECK(after.line_vertex_counts == before.line_vertex_counts);
  }
}

TEST_CASE("reweight recomputes sums") {
  const auto cs = compute_combinatorics(triangle());
  const std::vector<std::int64_t> w{1, 1, 2};
  const auto r = reweight(cs, w);
  CHECK(r.d_e == 4);
  CHECK(r.weights == w);
  CHECK_THROWS_AS(reweight(cs, std::vector<std::int64_t>{1, 2}), Error);
}
