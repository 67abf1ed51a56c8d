#include "lamono/census.hpp"

#include <numeric>
#include <ostream>

#include "lamono/error.hpp"
#include "lamono/localsys.hpp"
#include "lamono/report.hpp"
#include "lamono/verify.hpp"

namespace lamono {

std::optional<WeightedArrangement> draw_arrangement(SplitMix64& rng, int max_lines) {
  const auto d = 3 + static_cast<std::size_t>(rng.uniform(static_cast<std::uint64_t>(max_lines - 2)));
  std::vector<Line> lines;
  lines.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& dir = kCensusDirections[rng.uniform(kCensusDirections.size())];
    const auto offset = static_cast<long>(rng.uniform(2 * kCensusOffsetBound + 1)) - kCensusOffsetBound;
    lines.emplace_back(GaussianRational(dir[0]), GaussianRational(dir[1]), GaussianRational(offset));
  }
  try {
    return WeightedArrangement(std::move(lines), std::vector<std::int64_t>(d, 1));
  } catch (const Error& ex) {
    if (ex.code() == ErrorCode::DuplicateLine || ex.code() == ErrorCode::NotEssential) return std::nullopt;
    throw;
  }
}

WeightedArrangement next_arrangement(SplitMix64& rng, int max_lines, std::uint64_t* discarded) {
  for (;;) {
    if (auto arr = draw_arrangement(rng, max_lines)) return *std::move(arr);
    if (discarded != nullptr) ++*discarded;
  }
}

std::vector<std::int64_t> random_weights(SplitMix64& rng, std::size_t d, int max_weight) {
  std::vector<std::int64_t> w(d);
  std::int64_t g = 0;
  for (auto& e : w) {
    e = 1 + static_cast<std::int64_t>(rng.uniform(static_cast<std::uint64_t>(max_weight)));
    g = std::gcd(g, e);
  }
  for (auto& e : w) e /= g;
  return w;
}

void RunConfig::validate() const {
  if (count < 1) throw Error(ErrorCode::ConfigError, "count must be >= 1");
  if (max_lines < 3 || max_lines > 12) throw Error(ErrorCode::ConfigError, "max-lines must lie in [3, 12]");
  if (max_order < 2 || max_order > 24) throw Error(ErrorCode::ConfigError, "max-order must lie in [2, 24]");
}

std::string to_string(Tighter t) {
  switch (t) {
    case Tighter::Zero: return "zero";
    case Tighter::Infinity: return "infinity";
    case Tighter::Tie: return "tie";
  }
  return "tie";
}

namespace {

Json row_json(const CensusRow& row) {
  Json lines = Json::array();
  for (const Line& l : row.lines) lines.push_back(Json::array({to_json(l.a()), to_json(l.b()), to_json(l.c())}));
  Json histogram = Json::object();
  for (const auto& [m, count] : row.histogram) histogram[std::to_string(m)] = count;
  return Json{{"seed", row.seed},
              {"index", row.index},
              {"lines", std::move(lines)},
              {"d", row.d},
              {"p", row.p},
              {"histogram", std::move(histogram)},
              {"order", row.order},
              {"N0", row.n_zero},
              {"NInfinity", row.n_infinity},
              {"bound", row.bound},
              {"vertexSumZero", row.vertex_sum_zero},
              {"vertexSumInfinity", row.vertex_sum_infinity ? Json(*row.vertex_sum_infinity) : Json(nullptr)},
              {"tighter", to_string(row.tighter)}};
}

}  // namespace

CensusSummary run_census(const RunConfig& config, std::ostream& out, std::vector<CensusRow>* rows) {
  config.validate();
  SplitMix64 rng(config.seed);
  CensusSummary summary;
  for (std::int64_t index = 0; index < config.count; ++index) {
    const WeightedArrangement arr = next_arrangement(rng, config.max_lines, &summary.discarded_draws);
    ++summary.arrangements;
    const CombinatorialSummary cs = compute_combinatorics(arr);
    if (!verify_summary(cs).all_passed()) {
      ++summary.verify_failures;
      continue;
    }
    for (int order = 2; order <= config.max_order; ++order) {
      const BoundReport br = h1_upper_bound(cs, equimonodromic_system(order, arr.size()));
      CensusRow row;
      row.seed = config.seed;
      row.index = index;
      row.lines = arr.lines();
      row.d = cs.d;
      row.p = cs.p();
      row.histogram = cs.histogram;
      row.order = br.order;
      row.n_zero = br.n_zero;
      row.n_infinity = br.n_infinity;
      row.bound = br.bound;
      row.vertex_sum_zero = br.vertex_sum_zero;
      row.vertex_sum_infinity = br.vertex_sum_infinity;
      row.tighter = br.n_zero < br.n_infinity   ? Tighter::Zero
                    : br.n_infinity < br.n_zero ? Tighter::Infinity
                                                : Tighter::Tie;
      switch (row.tighter) {
        case Tighter::Zero: ++summary.tighter_zero; break;
        case Tighter::Infinity: ++summary.tighter_infinity; break;
        case Tighter::Tie: ++summary.ties; break;
      }
      ++summary.rows;
      out << row_json(row).dump() << '\n';
      if (rows != nullptr) rows->push_back(std::move(row));
    }
  }
  out << Json{{"summary", Json{{"seed", config.seed},
                               {"arrangements", summary.arrangements},
                               {"rows", summary.rows},
                               {"tighterZero", summary.tighter_zero},
                               {"tighterInfinity", summary.tighter_infinity},
                               {"ties", summary.ties},
                               {"discardedDraws", summary.discarded_draws},
                               {"verifyFailures", summary.verify_failures}}}}
             .dump()
      << '\n';
  return summary;
}

}  // namespace lamono
