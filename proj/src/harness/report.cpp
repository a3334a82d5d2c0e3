#include <algorithm>

#include "m24/exact/rational.hpp"
#include "m24/harness/harness.hpp"

namespace m24 {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string rat_json(const Rat& x) {
  // Always "p/q", also for integers.
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

nlohmann::json to_json(const VerificationReport& r, bool with_timing) {
  nlohmann::json j;
  j["claim"] = r.claim;
  j["module"] = r.module;
  j["description"] = r.description;
  j["inputs"] = r.inputs;
  j["verdict"] = to_string(r.verdict);
  j["evidence"] = r.evidence;
  if (r.error_stage) j["error"] = {{"stage", *r.error_stage}, {"message", r.error_message.value_or("")}};
  if (with_timing) j["wall_clock_seconds"] = r.wall_seconds;
  return j;
}

nlohmann::json report_bundle(std::vector<VerificationReport> reports, const RunConfig& cfg, bool with_timing) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const VerificationReport& a, const VerificationReport& b) { return a.claim < b.claim; });
  nlohmann::json out;
  out["schema"] = kReportSchema;
  out["config"] = {{"s", rat_json(cfg.s)},
                   {"precision_bits", cfg.precision},
                   {"seed", cfg.seed},
                   {"only", cfg.only ? nlohmann::json(*cfg.only) : nlohmann::json(nullptr)}};
  nlohmann::json list = nlohmann::json::array();
  std::size_t pass = 0, fail = 0, inconclusive = 0;
  for (const auto& r : reports) {
    list.push_back(to_json(r, with_timing));
    if (r.verdict == Verdict::Pass) ++pass;
    else if (r.verdict == Verdict::Fail) ++fail;
    else ++inconclusive;
  }
  out["reports"] = std::move(list);
  out["summary"] = {{"pass", pass}, {"fail", fail}, {"inconclusive", inconclusive}};
  return out;
}

int exit_code(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict != Verdict::Pass) return 1;
  return 0;
}

}  // namespace m24
