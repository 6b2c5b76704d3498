#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spq/census.hpp"
#include "spq/io.hpp"

namespace spq::cli {

namespace {

// "@path" reads the space description from a file.
RotationData load_space(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot read " + arg.substr(1));
    std::ostringstream text;
    text << in.rdbuf();
    return parse_space(text.str());
  }
  return parse_space(arg);
}

std::string describe(const KInvariant& k) {
  return "(" + to_expression(k.first) + ", " + to_expression(k.second) + ") mod " + std::to_string(k.prime());
}

int check_free(const std::string& arg, std::ostream& out, std::ostream& err) {
  const RotationData X = load_space(arg);
  const FreenessReport report = is_free(X);
  out << to_json(report).dump() << '\n';
  if (report.free) {
    err << "free\n";
    return ok;
  }
  const auto& g = *report.violating_element;
  const auto& [i, j] = *report.violating_pair;
  err << "not free: gamma=(" << g[0] << "," << g[1] << ") fixes points on coordinate planes (" << i << "," << j
      << ")\n";
  return negative;
}

int invariants(const std::string& arg, std::ostream& out, std::ostream& err) {
  const RotationData X = load_space(arg);
  const KInvariant k = k_invariant(X);
  const CohomRingModel model = build_model(k, X.prime(), X.n());
  const TotalClass pontrjagin = total_pontrjagin(X, model);
  json report;
  report["space"] = to_json(X);
  report["k"] = to_json(k);
  report["pontrjagin"] = to_json(pontrjagin);
  report["pontrjagin_trivial"] = pontrjagin.is_trivial();
  out << report.dump() << '\n';
  err << "k = " << describe(k) << '\n';
  for (int d = 4; d <= 2 * model.max_degree(); d += 4) {
    auto it = pontrjagin.components.find(d);
    err << "p_" << d / 4 << " (degree " << d << ") = "
        << (it == pontrjagin.components.end() ? std::string("0") : to_expression(it->second)) << '\n';
  }
  return ok;
}

int compare(const std::string& x_arg, const std::string& y_arg, const std::string& level, bool marked,
            std::ostream& out, std::ostream& err) {
  const RotationData X = load_space(x_arg);
  const RotationData Y = load_space(y_arg);
  const ClassifyOptions options{marked ? Marking::marked : Marking::unmarked};
  Verdict verdict;
  if (level == "homotopy") {
    verdict = homotopy_equivalent(X, Y, options);
  } else if (level == "simple") {
    verdict = simple_homotopy_equivalent(X, Y, options);
  } else {
    verdict = homeomorphic(X, Y, options);
  }
  out << to_json(verdict).dump() << '\n';
  err << (verdict.equivalent ? "equivalent" : "not equivalent") << " at level " << to_string(verdict.level) << " ("
      << verdict.checked_pairs << " pairs checked)\n";
  return verdict.equivalent ? ok : negative;
}

int census(int p, int n, const std::string& dir, const CensusOptions& options, std::ostream& out,
           std::ostream& err) {
  const CensusRecord record = run_census(Prime(p), n, options);
  write_census_files(record, dir);
  json summary;
  summary["p"] = record.p;
  summary["n"] = record.n;
  summary["exhaustive"] = record.exhaustive;
  summary["outside_hypotheses"] = record.outside_hypotheses;
  summary["candidates"] = record.candidates;
  summary["total_pairs"] = record.total_pairs;
  summary["free_count"] = record.free_count;
  summary["homotopy_classes"] = record.homotopy_classes;
  summary["homeomorphism_classes"] = record.homeomorphism_classes;
  out << summary.dump() << '\n';
  if (record.outside_hypotheses)
    err << "warning: p=" << p << ", n=" << n
        << " lies outside the classification hypotheses (p > 3, p > n+1); classes are for reference only\n";
  err << record.free_count << " free spaces, " << record.homotopy_classes << " homotopy classes, "
      << record.homeomorphism_classes << " homeomorphism classes\n";
  return ok;
}

json case_list(const std::vector<ApplicationCase>& cases) {
  json list = json::array();
  for (const auto& c : cases) list.push_back({c.r1, c.r2, c.q1, c.q2});
  return list;
}

int verify_application(int p, std::ostream& out, std::ostream& err) {
  const ApplicationReport report = verify_application_theorem(Prime(p));
  json j;
  j["p"] = report.p;
  j["quadruples"] = report.quadruples;
  j["criterion_holds"] = report.criterion_holds;
  j["homeomorphic"] = report.homeomorphic_count;
  j["sufficiency_failures"] = case_list(report.sufficiency_failures);
  j["necessity_failures"] = case_list(report.necessity_failures);
  j["discrepancies"] = report.discrepancies();
  out << j.dump() << '\n';
  err << report.quadruples << " quadruples, " << report.discrepancies() << " discrepancies\n";
  return report.discrepancies() == 0 ? ok : negative;
}

int lens_compare(int p, const std::vector<std::int64_t>& r, const std::vector<std::int64_t>& rp, std::ostream& out,
                 std::ostream& err) {
  const Prime prime(p);
  if (r.size() != rp.size()) throw InvalidDimension("r and rp must have the same length");
  const int n = static_cast<int>(r.size());
  const bool homotopy = lens_homotopy_equivalent(prime, n, r, rp);
  const bool simple = lens_simple_homotopy_equivalent(prime, n, r, rp);
  json j;
  j["p"] = p;
  j["n"] = n;
  j["homotopy_equivalent"] = homotopy;
  j["simple_homotopy_equivalent"] = simple;
  out << j.dump() << '\n';
  err << "homotopy equivalent: " << (homotopy ? "yes" : "no") << ", simple homotopy equivalent: "
      << (simple ? "yes" : "no") << '\n';
  return homotopy ? ok : negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free linear (Z/p)^2 actions on products of spheres"};
  app.require_subcommand(1);

  std::string space, space_y;
  auto* check_cmd = app.add_subcommand("check-free", "Decide freeness; exit 1 with a witness when not free");
  check_cmd->add_option("space", space, "JSON object, inline 'p=.. n=.. R=.. Q=..', 'lens p=.. r=.. rp=..' or @file")
      ->required();

  auto* inv_cmd = app.add_subcommand("invariants", "Print the k-invariant and the reduced total Pontrjagin class");
  inv_cmd->add_option("space", space, "space description")->required();

  std::string level = "homotopy";
  bool marked = false;
  auto* cmp_cmd = app.add_subcommand("compare", "Decide equivalence of two spaces; exit 0 with a witness");
  cmp_cmd->add_option("X", space, "first space")->required();
  cmp_cmd->add_option("Y", space_y, "second space")->required();
  cmp_cmd->add_option("--level", level, "homotopy, simple or homeo")
      ->check(CLI::IsMember({"homotopy", "simple", "homeo"}));
  cmp_cmd->add_flag("--marked", marked, "fix the identification of the fundamental group");

  int p = 0, n = 2;
  std::string dir = ".";
  CensusOptions census_options;
  std::uint64_t sample = 0;
  auto* census_cmd = app.add_subcommand("census", "Enumerate free spaces and partition them into classes");
  census_cmd->add_option("--p", p, "odd prime")->required();
  census_cmd->add_option("--n", n, "spheres are S^{2n-1}");
  census_cmd->add_option("--out", dir, "output directory");
  census_cmd->add_option("--workers", census_options.workers, "worker threads")->check(CLI::PositiveNumber);
  auto* sample_opt = census_cmd->add_option("--sample", sample, "sample this many candidates instead")
                         ->check(CLI::PositiveNumber);
  census_cmd->add_option("--seed", census_options.seed, "sampling seed");

  auto* verify_cmd = app.add_subcommand("verify-application",
                                        "Compare the quadratic-residue criterion with the classifier on lens products");
  verify_cmd->add_option("--p", p, "odd prime")->required();

  std::vector<std::int64_t> r, rp;
  auto* lens_cmd = app.add_subcommand("lens-compare", "Classical homotopy and simple-homotopy tests for lens spaces");
  lens_cmd->add_option("--p", p, "odd prime")->required();
  lens_cmd->add_option("--r", r, "rotation numbers")->required()->delimiter(',');
  lens_cmd->add_option("--rp", rp, "rotation numbers")->required()->delimiter(',');

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid;
  }

  try {
    if (check_cmd->parsed()) return check_free(space, out, err);
    if (inv_cmd->parsed()) return invariants(space, out, err);
    if (cmp_cmd->parsed()) return compare(space, space_y, level, marked, out, err);
    if (census_cmd->parsed()) {
      if (sample_opt->count() > 0) census_options.sample = sample;
      return census(p, n, dir, census_options, out, err);
    }
    if (verify_cmd->parsed()) return verify_application(p, out, err);
    if (lens_cmd->parsed()) return lens_compare(p, r, rp, out, err);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return capacity;
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violated: " << e.what() << '\n';
    return invalid;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << '\n';
    return invalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return invalid;
  }
  return invalid;
}

}  // namespace spq::cli
