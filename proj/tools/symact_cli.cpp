// Command-line front end: catalog listing, single-action analysis from a
// spec file, and the batch verification reports.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 inconclusive numerical verdict.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <string>

#include "symact/specfile.hpp"

namespace {

using nlohmann::json;

int run_catalog(bool as_json) {
  const auto names = symact::embedding_catalog_names();
  if (as_json) {
    json out;
    out["embeddings"] = json::array();
    for (const auto& n : names) {
      const auto fam = symact::embedding_family(n);
      out["embeddings"].push_back({{"name", n},
                                   {"dim", fam.size()},
                                   {"ambient_size", fam.front().rows()}});
    }
    out["involution_families"] = {"AI", "AII", "AIII", "BDI", "DIII", "CI", "CII"};
    out["builders"] = {"hermann", "sigma", "chain", "example"};
    out["examples"] = {"triality", "triality-grassmannian", "spin7-pair", "u3-chain", "spin9"};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "embeddings:\n";
  for (const auto& n : names) {
    const auto fam = symact::embedding_family(n);
    std::printf("  %-16s dim %3zu  ambient %ld\n", n.c_str(), fam.size(),
                static_cast<long>(fam.front().rows()));
  }
  std::cout << "involution families: AI AII AIII BDI DIII CI CII\n";
  std::cout << "builders: hermann sigma chain example\n";
  std::cout << "examples: triality triality-grassmannian spin7-pair u3-chain spin9\n";
  return 0;
}

json report_to_json(const symact::Report& rep) {
  json cases = json::array();
  for (const auto& c : rep.cases)
    cases.push_back(
        {{"id", c.id}, {"pass", c.pass}, {"external", c.external}, {"detail", c.detail}});
  return {{"name", rep.name}, {"all_pass", rep.all_pass()}, {"cases", cases}};
}

void print_report(const symact::Report& rep) {
  std::printf("[%s]\n", rep.name.c_str());
  for (const auto& c : rep.cases)
    std::printf("  %-28s %s  %s\n", c.id.c_str(),
                c.external ? "EXTERNAL" : (c.pass ? "pass" : "FAIL"), c.detail.c_str());
  std::printf("  => %s\n", rep.all_pass() ? "all computed cases pass" : "FAILURES present");
}

int run_analyze(const std::string& path, std::uint64_t seed_override, bool has_seed,
                double tol_override, bool has_tol, bool as_json) {
  symact::ActionSpec spec;
  try {
    spec = symact::parse_action_spec_file(path);
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  if (has_seed) spec.seed = seed_override;
  if (has_tol) spec.tol = symact::Tolerance(tol_override, tol_override * 1e-2);
  symact::AnalysisReport rep;
  try {
    const symact::ActionModel action = symact::build_from_spec(spec);
    rep = symact::analyze_action(action, symact::Rng(spec.seed));
  } catch (const symact::SpecParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (as_json) {
    json out = {{"name", rep.name},
                {"seed", rep.seed},
                {"dim_space", rep.dim_space},
                {"dim_algebra", rep.dim_algebra},
                {"space_rank", rep.space_rank},
                {"cohomogeneity", rep.cohomogeneity},
                {"dim_bound_holds", rep.dim_bound},
                {"hyperpolar", rep.hyperpolar},
                {"inconclusive", rep.inconclusive},
                {"residual", rep.residual},
                {"factor_transitive", rep.factor_transitive}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("action           %s\n", rep.name.c_str());
    std::printf("seed             %llu\n", static_cast<unsigned long long>(rep.seed));
    std::printf("dim space        %d\n", rep.dim_space);
    std::printf("dim algebra      %d\n", rep.dim_algebra);
    std::printf("space rank       %d\n", rep.space_rank);
    std::printf("cohomogeneity    %d\n", rep.cohomogeneity);
    std::printf("dim bound holds  %s\n", rep.dim_bound ? "true" : "false");
    std::printf("hyperpolar       %s%s\n", rep.hyperpolar ? "true" : "false",
                rep.inconclusive ? " (inconclusive)" : "");
    std::printf("residual         %.3e\n", rep.residual);
    std::printf("factor transitive");
    for (bool t : rep.factor_transitive) std::printf(" %s", t ? "true" : "false");
    std::printf("\n");
  }
  return rep.inconclusive ? 3 : 0;
}

int run_verify(const std::string& which, std::uint64_t seed, bool as_json) {
  std::vector<symact::Report> reports;
  symact::Rng rng(seed);
  try {
    if (which == "table1" || which == "all")
      reports.push_back(symact::verify_table1(rng.split(1)));
    if (which == "section7" || which == "all")
      reports.push_back(symact::verify_section7_exclusions(rng.split(2)));
    if (which == "section9" || which == "all")
      reports.push_back(symact::verify_section9_examples(rng.split(3)));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (reports.empty()) {
    std::cerr << "unknown report '" << which << "' (use table1|section7|section9|all)\n";
    return 2;
  }
  bool ok = true;
  if (as_json) {
    json out = json::array();
    for (const auto& r : reports) {
      out.push_back(report_to_json(r));
      ok = ok && r.all_pass();
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      print_report(r);
      ok = ok && r.all_pass();
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperpolar-action analysis on products of compact symmetric spaces"};
  app.require_subcommand(1);

  bool json_flag = false;

  auto* cat = app.add_subcommand("catalog", "list catalog identifiers");
  bool cat_json = false;
  cat->add_flag("--json", cat_json, "JSON output");

  auto* ana = app.add_subcommand("analyze", "analyze an action described by a spec file");
  std::string spec_path;
  std::uint64_t seed = 42;
  double tol = 0;
  ana->add_option("file", spec_path, "action spec file")->required();
  auto* seed_opt = ana->add_option("--seed", seed, "override the seed from the action file");
  auto* tol_opt = ana->add_option("--tol", tol, "override rel_eps");
  ana->add_flag("--json", json_flag, "JSON output");

  auto* ver = app.add_subcommand("verify", "run a batch verification report");
  std::string which;
  std::uint64_t vseed = 42;
  bool ver_json = false;
  ver->add_option("report", which, "table1 | section7 | section9 | all")->required();
  ver->add_option("--seed", vseed, "sampling seed");
  ver->add_flag("--json", ver_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cat->parsed()) return run_catalog(cat_json);
  if (ana->parsed())
    return run_analyze(spec_path, seed, seed_opt->count() > 0, tol, tol_opt->count() > 0,
                       json_flag);
  if (ver->parsed()) return run_verify(which, vseed, ver_json);
  return 2;
}
