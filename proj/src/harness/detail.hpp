#pragma once

#include <chrono>
#include <exception>
#include <string>

#include "m24/harness/harness.hpp"

namespace m24::detail {

/// Runs body(report, stage), timing it; an escaping exception fails the
/// report and records the stage label current at the throw.
template <class Body>
VerificationReport run_claim(VerificationReport r, Body&& body) {
  std::string stage = "setup";
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r, stage);
  } catch (const std::exception& e) {
    r.verdict = Verdict::Fail;
    r.error_stage = stage;
    r.error_message = e.what();
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline VerificationReport make_report(std::string claim, std::string module, std::string description) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.module = std::move(module);
  r.description = std::move(description);
  return r;
}

inline Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

nlohmann::json cycle_type_json(const std::vector<int>& type);

}  // namespace m24::detail
