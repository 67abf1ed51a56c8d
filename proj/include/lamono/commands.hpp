#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lamono/census.hpp"

namespace lamono::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInvariant = 2;

enum class Site { Zero, Infinity };

// Each command writes one JSON document (or JSONL for census) to `out` and
// returns the process exit code. Input and validation errors print an error
// object and return 1; broken cross-identities return 2.

int cmd_info(const std::string& path, std::ostream& out);
int cmd_charpoly(const std::string& path, Site site, bool expand, std::ostream& out);
int cmd_zeta(const std::string& path, std::ostream& out);
int cmd_bound(const std::string& path, std::int64_t order, const std::optional<std::vector<std::int64_t>>& residues,
              std::ostream& out);

/// `inject_fault` corrupts the combinatorial summary before the battery runs;
/// it exists to exercise the failure path.
int cmd_verify(const std::string& path, std::ostream& out, bool inject_fault = false);

/// Writes JSONL to `out_path`, or to `out` when the path is empty.
int cmd_census(const RunConfig& config, const std::string& out_path, std::ostream& out);

}  // namespace lamono::cli
