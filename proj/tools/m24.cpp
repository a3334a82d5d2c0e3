// Command-line front end: one subcommand per claim, JSON on stdout.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "m24/exact/rational.hpp"
#include "m24/harness/harness.hpp"

using namespace m24;

namespace {

struct Options {
  std::string s = "0";
  Precision precision = 512;
  std::uint64_t seed = 0;
  std::string report;
  std::string only;
  // subcommand-specific
  std::string t0 = "1";
  std::uint64_t p = 7;
  std::size_t count = 4;
  std::string mode = "residual-check";
  std::string value;
  std::size_t degree = 2;
  std::size_t samples = 150;
};

int emit(const std::vector<VerificationReport>& reports, const RunConfig& cfg, const std::string& path) {
  const nlohmann::json bundle = report_bundle(reports, cfg);
  std::cout << bundle.dump(2) << "\n";
  if (!path.empty()) {
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write report to " << path << "\n";
      return 1;
    }
    out << bundle.dump(2) << "\n";
  }
  return exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification tools for a degree-24 family of covers with Mathieu monodromy"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--s", o.s, "family parameter, a rational p/q")->capture_default_str();
    sub->add_option("--precision-bits", o.precision, "working precision in bits")->capture_default_str();
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sub->add_option("--report", o.report, "also write the JSON report to this path");
  };

  auto* galois = app.add_subcommand("verify-galois", "full evidence chain for the Galois group");
  common(galois);
  auto* ded = app.add_subcommand("dedekind", "factor degrees of F_s(X, t0) mod p");
  common(ded);
  ded->add_option("--t", o.t0, "specialization t0")->capture_default_str();
  ded->add_option("--p", o.p, "prime")->capture_default_str();
  auto* disc = app.add_subcommand("disc-square", "squareness of the discriminant in t");
  common(disc);
  auto* branch = app.add_subcommand("branch-points", "branch cubic and fiber shapes");
  common(branch);
  auto* search = app.add_subcommand("rational-branch-search", "parameters with three rational branch points");
  common(search);
  search->add_option("--count", o.count, "number of parameters")->capture_default_str();
  auto* mono = app.add_subcommand("monodromy", "monodromy permutations and group order");
  common(mono);
  auto* red = app.add_subcommand("rediscover", "residual system, Newton refinement and algdep");
  common(red);
  red->add_option("--mode", o.mode, "residual-check, newton-demo or algdep")
      ->check(CLI::IsMember({"residual-check", "newton-demo", "algdep"}))
      ->capture_default_str();
  red->add_option("--value", o.value, "decimal or hex-float value for algdep");
  red->add_option("--degree", o.degree, "maximal degree for algdep")->capture_default_str();
  auto* all = app.add_subcommand("run-all", "every acceptance claim");
  common(all);
  all->add_option("--only", o.only, "restrict to one module");
  all->add_option("--profile-samples", o.samples, "parameters for the degree profile")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  RunConfig cfg;
  try {
    cfg.s = parse_rat(o.s);
  } catch (const std::exception& e) {
    std::cerr << "bad --s: " << e.what() << "\n";
    return 2;
  }
  cfg.precision = o.precision;
  cfg.seed = o.seed;
  if (!o.only.empty()) cfg.only = o.only;
  cfg.profile_samples = o.samples;

  try {
    if (galois->parsed()) {
      if (cfg.s == 1) {
        emit({verify_m24(cfg.s, cfg.precision, cfg.seed)}, cfg, o.report);
        return 2;
      }
      return emit({verify_m24(cfg.s, cfg.precision, cfg.seed)}, cfg, o.report);
    }
    if (ded->parsed()) return emit({claim_dedekind(cfg.s, parse_rat(o.t0), o.p, cfg.seed)}, cfg, o.report);
    if (disc->parsed()) return emit({claim_disc_square(cfg.s)}, cfg, o.report);
    if (branch->parsed()) return emit({claim_branch_structure({cfg.s})}, cfg, o.report);
    if (search->parsed()) {
      const nlohmann::json list = rational_branch_search_json(o.count);
      std::cout << list.dump(2) << "\n";
      if (!o.report.empty()) std::ofstream(o.report) << list.dump(2) << "\n";
      return 0;
    }
    if (mono->parsed()) return emit({claim_monodromy(cfg.s, cfg.precision, cfg.seed, false)}, cfg, o.report);
    if (red->parsed()) {
      if (o.mode == "residual-check") return emit({rediscover_residual_check(cfg.s)}, cfg, o.report);
      if (o.mode == "newton-demo") return emit({rediscover_newton_demo(cfg.s, cfg.precision, cfg.seed)}, cfg, o.report);
      if (o.value.empty()) {
        std::cerr << "--mode algdep needs --value\n";
        return 2;
      }
      return emit({rediscover_algdep(o.value, o.degree, cfg.precision)}, cfg, o.report);
    }
    if (all->parsed()) return emit(run_all(cfg), cfg, o.report);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
