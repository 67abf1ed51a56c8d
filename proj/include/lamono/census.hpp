#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lamono/arrangement.hpp"

namespace lamono {

/// splitmix64 with the published constants.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n) by rejection: outputs below 2^64 mod n are redrawn.
  std::uint64_t uniform(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

 private:
  std::uint64_t state_;
};

/// Directions (a, b) the census draws lines a x + b y + c from.
inline constexpr std::array<std::array<int, 2>, 6> kCensusDirections{
    {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}}};
inline constexpr int kCensusOffsetBound = 20;

/// One draw: d uniform in [3, max_lines], then per line a direction index
/// uniform in [0, 6) and an offset uniform in [-20, 20]. Returns nullopt when
/// the draw repeats a line or is not essential.
std::optional<WeightedArrangement> draw_arrangement(SplitMix64& rng, int max_lines);

/// Draws until a valid arrangement comes out. `discarded` counts rejected draws.
WeightedArrangement next_arrangement(SplitMix64& rng, int max_lines, std::uint64_t* discarded = nullptr);

/// d weights uniform in [1, max_weight], divided by their gcd.
std::vector<std::int64_t> random_weights(SplitMix64& rng, std::size_t d, int max_weight);

struct RunConfig {
  std::uint64_t seed = 1;
  std::int64_t count = 200;
  int max_lines = 8;
  int max_order = 6;

  /// Throws ConfigError unless count >= 1, 3 <= max_lines <= 12, 2 <= max_order <= 24.
  void validate() const;
};

enum class Tighter { Zero, Infinity, Tie };

struct CensusRow {
  std::uint64_t seed = 0;
  std::int64_t index = 0;
  std::vector<Line> lines;
  std::int64_t d = 0;
  std::int64_t p = 0;
  std::map<std::int64_t, std::int64_t> histogram;
  std::int64_t order = 0;
  std::int64_t n_zero = 0;
  std::int64_t n_infinity = 0;
  std::int64_t bound = 0;
  std::int64_t vertex_sum_zero = 0;
  std::optional<std::int64_t> vertex_sum_infinity;
  Tighter tighter = Tighter::Tie;
};

struct CensusSummary {
  std::int64_t arrangements = 0;
  std::int64_t rows = 0;
  std::int64_t tighter_zero = 0;
  std::int64_t tighter_infinity = 0;
  std::int64_t ties = 0;
  std::uint64_t discarded_draws = 0;
  std::int64_t verify_failures = 0;
};

std::string to_string(Tighter t);

/// Generates the census, writing one JSON line per row followed by a summary
/// line. Arrangements failing the verify battery emit no rows and are counted
/// in verify_failures.
CensusSummary run_census(const RunConfig& config, std::ostream& out, std::vector<CensusRow>* rows = nullptr);

}  // namespace lamono
