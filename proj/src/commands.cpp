#include "lamono/commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "lamono/report.hpp"

namespace lamono::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

/// Maps library errors onto exit codes: InternalError is an invariant
/// violation (2), everything else is bad input (1).
int guarded(std::ostream& out, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& ex) {
    emit(out, error_json(ex.code(), ex.what()));
    return ex.code() == ErrorCode::InternalError ? kExitInvariant : kExitInput;
  }
}

CombinatorialSummary load(const std::string& path) { return compute_combinatorics(parse_arrangement(read_file(path))); }

}  // namespace

int cmd_info(const std::string& path, std::ostream& out) {
  return guarded(out, [&] {
    const CombinatorialSummary cs = load(path);
    const InvariantReport report = invariant_report(cs);
    const VerificationSummary checks = verify_summary(cs);
    Json doc = to_json(report);
    doc["combinatorics"] = to_json(cs);
    doc["checksPassed"] = checks.all_passed();
    emit(out, doc);
    return report.numbers_identity_holds && checks.all_passed() ? kExitOk : kExitInvariant;
  });
}

int cmd_charpoly(const std::string& path, Site site, bool expand, std::ostream& out) {
  return guarded(out, [&] {
    const CombinatorialSummary cs = load(path);
    const FactoredUnityPoly poly = site == Site::Zero ? charpoly_zero_closed(cs) : charpoly_infinity(cs);
    Json doc{{"at", site == Site::Zero ? "zero" : "infinity"},
             {"factors", to_json(poly)},
             {"cyclotomic", to_json(fp_to_cyclotomic(poly))},
             {"degree", fp_degree(poly)}};
    if (expand) doc["coefficients"] = to_json(fp_expand(poly));
    emit(out, doc);
    return kExitOk;
  });
}

int cmd_zeta(const std::string& path, std::ostream& out) {
  return guarded(out, [&] {
    const CombinatorialSummary cs = load(path);
    const ZetaFunction z = zeta_at_zero(cs);
    Json doc = zeta_to_json(z);
    const FactoredUnityPoly det = charpoly_zero_from_zeta(z);
    doc["charpolyFromZeta"] = to_json(fp_to_cyclotomic(det));
    const bool agrees = fp_to_cyclotomic(det) == fp_to_cyclotomic(charpoly_zero_closed(cs));
    doc["agreesWithClosedForm"] = agrees;
    emit(out, doc);
    return agrees ? kExitOk : kExitInvariant;
  });
}

int cmd_bound(const std::string& path, std::int64_t order, const std::optional<std::vector<std::int64_t>>& residues,
              std::ostream& out) {
  return guarded(out, [&] {
    if (order < 2) throw Error(ErrorCode::ConfigError, "--order must be >= 2");
    const CombinatorialSummary cs = load(path);
    const LocalSystem L = residues ? local_system_from_residues(order, *residues)
                                   : equimonodromic_system(order, static_cast<std::size_t>(cs.d));
    const BoundReport report = h1_upper_bound(cs, L);
    Json doc = to_json(report);
    doc["deltaF"] = to_json(delta_f(reweight(cs, L.residues())));
    emit(out, doc);
    return kExitOk;
  });
}

int cmd_verify(const std::string& path, std::ostream& out, bool inject_fault) {
  return guarded(out, [&] {
    CombinatorialSummary cs = load(path);
    if (inject_fault) cs.histogram[2] += 1;
    const VerificationSummary summary = verify_summary(cs);
    emit(out, to_json(summary));
    return summary.all_passed() ? kExitOk : kExitInvariant;
  });
}

int cmd_census(const RunConfig& config, const std::string& out_path, std::ostream& out) {
  return guarded(out, [&] {
    config.validate();
    CensusSummary summary;
    if (out_path.empty()) {
      summary = run_census(config, out);
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw Error(ErrorCode::ConfigError, "cannot write '" + out_path + "'");
      summary = run_census(config, file);
    }
    return summary.verify_failures == 0 ? kExitOk : kExitInvariant;
  });
}

}  // namespace lamono::cli
