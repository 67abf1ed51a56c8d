#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lamono/commands.hpp"

int main(int argc, char** argv) {
  using namespace lamono;

  CLI::App app{"Monodromy and twisted-cohomology bounds for weighted affine line arrangements"};
  app.require_subcommand(1);

  std::string path;
  std::string site = "zero";
  bool expand = false;
  std::int64_t order = 0;
  std::vector<std::int64_t> residues;
  bool inject_fault = false;
  RunConfig config;
  std::string out_path;

  auto* info = app.add_subcommand("info", "invariants and combinatorial summary");
  info->add_option("file", path, "arrangement JSON")->required();

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of the monodromy on H^1");
  charpoly->add_option("file", path, "arrangement JSON")->required();
  charpoly->add_option("--at", site, "zero or infinity")->check(CLI::IsMember({"zero", "infinity"}));
  charpoly->add_flag("--expand", expand, "also print dense coefficients");

  auto* zeta = app.add_subcommand("zeta", "stratified zeta function about the zero fiber");
  zeta->add_option("file", path, "arrangement JSON")->required();

  auto* bound = app.add_subcommand("bound", "upper bound on dim H^1 with local-system coefficients");
  bound->add_option("file", path, "arrangement JSON")->required();
  bound->add_option("--order", order, "order N of the local system")->required();
  bound->add_option("--residues", residues, "residues e_j (comma separated); default all 1")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "run the identity battery");
  verify->add_option("file", path, "arrangement JSON")->required();
  verify->add_flag("--inject-fault", inject_fault, "corrupt the summary first (negative control)")
      ->group("");  // hidden

  auto* census = app.add_subcommand("census", "random census of bound comparisons (JSONL)");
  census->add_option("--seed", config.seed, "splitmix64 seed")->required();
  census->add_option("--count", config.count, "number of arrangements")->required();
  census->add_option("--max-lines", config.max_lines, "maximum lines per arrangement");
  census->add_option("--max-order", config.max_order, "largest order N");
  census->add_option("--out", out_path, "output JSONL path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInput;
  }

  if (*info) return cli::cmd_info(path, std::cout);
  if (*charpoly) return cli::cmd_charpoly(path, site == "zero" ? cli::Site::Zero : cli::Site::Infinity, expand, std::cout);
  if (*zeta) return cli::cmd_zeta(path, std::cout);
  if (*bound) {
    return cli::cmd_bound(path, order, residues.empty() ? std::nullopt : std::optional(residues), std::cout);
  }
  if (*verify) return cli::cmd_verify(path, std::cout, inject_fault);
  if (*census) return cli::cmd_census(config, out_path, std::cout);
  return cli::kExitInput;
}
