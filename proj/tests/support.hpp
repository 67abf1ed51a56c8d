#pragma once

#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lamono/arrangement.hpp"
#include "lamono/exact/dense_poly.hpp"
#include "oracle.hpp"

namespace testing {

using IntLine = std::array<long, 3>;

inline lamono::WeightedArrangement make_arrangement(const std::vector<IntLine>& lines,
                                                    std::vector<std::int64_t> weights = {}) {
  std::vector<lamono::Line> out;
  for (const auto& [a, b, c] : lines) out.emplace_back(a, b, c);
  if (weights.empty()) weights.assign(lines.size(), 1);
  return lamono::WeightedArrangement(std::move(out), std::move(weights));
}

// x = 0, y = 0, x + y - 1 = 0
inline const std::vector<IntLine> kTriangle{{1, 0, 0}, {0, 1, 0}, {1, 1, -1}};
// x = 0, y = 0
inline const std::vector<IntLine> kAxes{{1, 0, 0}, {0, 1, 0}};
// xy(x+1)(y+1)(x+y+10)(x+y+11)(x-y+100)(x-y+101)
inline const std::vector<IntLine> kEightLines{{1, 0, 0},   {0, 1, 0},   {1, 0, 1},    {0, 1, 1},
                                              {1, 1, 10},  {1, 1, 11},  {1, -1, 100}, {1, -1, 101}};
// x, y, x + y, x - 1
inline const std::vector<IntLine> kConcurrent4{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 0, -1}};

inline lamono::WeightedArrangement triangle() { return make_arrangement(kTriangle); }
inline lamono::WeightedArrangement axes() { return make_arrangement(kAxes); }
inline lamono::WeightedArrangement weighted_triangle() { return make_arrangement(kTriangle, {1, 1, 2}); }
inline lamono::WeightedArrangement eight_lines() { return make_arrangement(kEightLines); }
inline lamono::WeightedArrangement concurrent4() { return make_arrangement(kConcurrent4); }

inline std::string fixture_path(const std::string& name) { return std::string(LAMONO_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Lines of a real arrangement in the oracle's representation.
inline std::vector<oracle::QLine> to_oracle(const lamono::WeightedArrangement& arr) {
  std::vector<oracle::QLine> out;
  for (const auto& l : arr.lines()) out.push_back({l.a().re, l.b().re, l.c().re});
  return out;
}

inline oracle::Poly to_oracle(const lamono::DensePoly& p) { return oracle::Poly(p.begin(), p.end()); }

}  // namespace testing
