// Runs every acceptance claim and prints one line per criterion.
// Exit status is nonzero when any criterion fails.

#include <cstdio>

#include "m24/harness/harness.hpp"

using namespace m24;

namespace {

struct Criterion {
  const char* claim;
  double budget_seconds;
};

// Runtime budgets per criterion, in claim order.
const Criterion kCriteria[] = {
    {"01-family-fidelity", 1},   {"02-dedekind", 10},       {"03-disc-square", 600},
    {"04-branch-structure", 300}, {"05-rational-branch", 300}, {"06-nontorsion", 1},
    {"07-monodromy", 900},       {"08-degree-profile", 1800}, {"09-rediscover", 600},
    {"10-property-suites", 300},
};

}  // namespace

int main() {
  RunConfig cfg;
  const std::vector<VerificationReport> reports = run_all(cfg);
  int failures = 0;
  int index = 0;
  for (const auto& c : kCriteria) {
    ++index;
    const VerificationReport* found = nullptr;
    int copies = 0;
    for (const auto& r : reports)
      if (r.claim == c.claim) {
        found = &r;
        ++copies;
      }
    bool ok = found && copies == 1 && found->verdict == Verdict::Pass && found->wall_seconds < c.budget_seconds;
    std::printf("criterion %2d %-20s %s", index, c.claim, ok ? "PASS" : "FAIL");
    if (found) {
      std::printf("  verdict=%s  %.2fs (budget %.0fs)", to_string(found->verdict), found->wall_seconds,
                  c.budget_seconds);
      if (found->error_stage)
        std::printf("  error at %s: %s", found->error_stage->c_str(), found->error_message.value_or("").c_str());
    } else {
      std::printf("  missing report");
    }
    std::printf("\n");
    if (!ok) ++failures;
  }
  if (reports.size() != std::size(kCriteria)) {
    std::printf("unexpected report count %zu\n", reports.size());
    ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(kCriteria)) - failures, std::size(kCriteria));
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
