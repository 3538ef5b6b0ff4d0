// Acceptance run: one line per criterion, then the individual checks.

#include <cstdio>
#include <string>
#include <vector>

#include "hypgeom/suite.hpp"

using namespace hypgeom;

namespace {

std::string summary(const CriterionResult& c) {
  if (!c.error.empty()) return "error: " + c.error;
  const Check* shown = nullptr;
  for (const auto& k : c.checks) {
    if (k.counted && !k.pass) {
      shown = &k;
      break;
    }
  }
  if (!shown && !c.checks.empty()) shown = &c.checks.front();
  if (!shown) return "no checks";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g vs %.3g", shown->value, shown->limit);
  return shown->name + ": " + buf;
}

}  // namespace

int main() {
  SuiteOptions opt;
  std::vector<CriterionResult> results;
  bool all = true;
  for (const auto& spec : criterion_specs()) {
    CriterionResult c = run_criterion(spec.id, opt);
    bool in_time = c.seconds <= c.budget_seconds;
    bool ok = c.pass && in_time;
    all = all && ok;
    std::printf("criterion %2d  %s  %-30s %6.2f s (budget %3.0f s)  %s%s\n", c.id, ok ? "PASS" : "FAIL",
                c.title.c_str(), c.seconds, c.budget_seconds, summary(c).c_str(), in_time ? "" : "  [over budget]");
    std::fflush(stdout);
    results.push_back(std::move(c));
  }

  std::printf("\nchecks (seed %llu)\n", static_cast<unsigned long long>(opt.seed));
  for (const auto& c : results) {
    for (const auto& k : c.checks) {
      std::printf("  %2d %s %s%s: %.6g vs %.3g%s%s\n", c.id, k.pass ? "ok  " : "FAIL", k.counted ? "" : "(supplementary) ",
                  k.name.c_str(), k.value, k.limit, k.note.empty() ? "" : "  ", k.note.c_str());
    }
  }
  std::printf("\n%s\n", all ? "all criteria pass" : "some criteria fail");
  return all ? 0 : 1;
}
