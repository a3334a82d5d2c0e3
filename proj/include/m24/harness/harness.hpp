#pragma once

// Claim runners, the Galois verification pipeline and JSON reporting.
// Every runner returns a VerificationReport and never throws: failures are
// recorded with the stage that raised them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "m24/exact/rational.hpp"
#include "m24/numeric/bigfloat.hpp"

namespace m24 {

inline constexpr int kReportSchema = 1;
inline constexpr long kM24Order = 244823040;

enum class Verdict { Pass, Fail, Inconclusive };
const char* to_string(Verdict v);

struct VerificationReport {
  std::string claim;        // sortable id, e.g. "07-monodromy"
  std::string module;       // used by --only
  std::string description;  // neutral statement of what is checked
  nlohmann::json inputs = nlohmann::json::object();  // s, seeds, precision
  Verdict verdict = Verdict::Inconclusive;
  nlohmann::json evidence = nlohmann::json::object();
  std::optional<std::string> error_stage;
  std::optional<std::string> error_message;
  double wall_seconds = 0;
};

/// Timing fields are left out when with_timing is false, which makes
/// reports byte-identical across runs with the same inputs.
nlohmann::json to_json(const VerificationReport& r, bool with_timing = true);

std::string rat_json(const Rat& x);

struct RunConfig {
  Rat s = 0;
  Precision precision = 512;
  std::uint64_t seed = 0;
  std::optional<std::string> only;  // module filter
  std::size_t profile_samples = 150;
  std::size_t property_cases = 1000;
};

/// Reports sorted by claim id, wrapped with schema, config and a summary.
nlohmann::json report_bundle(std::vector<VerificationReport> reports, const RunConfig& cfg, bool with_timing = true);

/// 0 when every report passed, 1 otherwise.
int exit_code(const std::vector<VerificationReport>& reports);

// ---- individual claims ------------------------------------------------------

VerificationReport claim_family_fidelity();
VerificationReport claim_dedekind(const Rat& s, const Rat& t0, std::uint64_t p, std::uint64_t seed);
/// disc_X(F_s)(t) from `nodes` integer evaluations, the last `held_out` of
/// which only check the interpolant; pass when it is a square in Q[t].
VerificationReport claim_disc_square(const Rat& s, std::size_t nodes = 120, std::size_t held_out = 10);
/// Each listed s must give a nondegenerate cubic with 2^8 1^8 fibers;
/// s = 1 must be rejected as degenerate.
VerificationReport claim_branch_structure(const std::vector<Rat>& params);
VerificationReport claim_rational_branch(std::size_t count);
VerificationReport claim_nontorsion();
/// With `stability`, reruns at doubled precision and with refined path
/// steps and requires identical permutations.
VerificationReport claim_monodromy(const Rat& s, Precision precision, std::uint64_t seed, bool stability);
VerificationReport claim_degree_profile(std::size_t samples);
VerificationReport claim_rediscover(Precision precision);
VerificationReport claim_property_suites(std::uint64_t seed, std::size_t cases);

/// Cycle types of M24 elements, each sorted in descending order.
const std::vector<std::vector<int>>& m24_cycle_types();

// ---- pipelines --------------------------------------------------------------

struct DedekindChoice {
  Rat t0 = 1;
  std::uint64_t p = 7;
};

/// Irreducibility, Dedekind pattern, discriminant square, branch shape,
/// monodromy, group order and double transitivity. s = 1 is rejected
/// before any computation.
VerificationReport verify_m24(const Rat& s, Precision precision, std::uint64_t seed,
                              const DedekindChoice& dedekind = {});

/// Runs the acceptance claims allowed by cfg.only, in claim order.
std::vector<VerificationReport> run_all(const RunConfig& cfg);

/// Module names accepted by --only.
const std::vector<std::string>& claim_modules();

// ---- single-purpose helpers for the CLI ------------------------------------

nlohmann::json rational_branch_search_json(std::size_t count);
VerificationReport rediscover_residual_check(const Rat& s);
VerificationReport rediscover_newton_demo(const Rat& s, Precision precision, std::uint64_t seed);
/// `value` is a decimal or hex-float literal (C99 "0x1.8p1" form).
VerificationReport rediscover_algdep(const std::string& value, std::size_t max_degree, Precision precision);

}  // namespace m24
