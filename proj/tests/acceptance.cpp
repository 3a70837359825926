// Acceptance suite: runs every verification suite at its contract scale and
// enforces the runtime budgets. One line per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "rainbow/verify.hpp"

#ifndef RAINBOW_DATA_DIR
#define RAINBOW_DATA_DIR "data"
#endif

namespace {

struct Criterion {
  int number;
  std::string label;
  std::vector<std::string> suites;
  double budget_seconds;
};

}  // namespace

int main() {
  using rainbow::SuiteResult;
  using rainbow::VerifyScale;

  VerifyScale scale;  // defaults are the acceptance scales
  scale.data_dir = RAINBOW_DATA_DIR;

  const std::vector<Criterion> criteria{
      {1, "bound table recursions, p,k <= 20, n <= 50", {"tables"}, 1.0},
      {2, "extraction guarantee (exhaustive n <= 6 + 10^4 seeded + pipeline)", {"extraction"}, 120.0},
      {3, "covering pigeonhole (exhaustive n <= 6 + 10^4 random, n <= 40)", {"pigeonhole"}, 60.0},
      {4, "classical cross-check R(3,3) = 6", {"ramsey"}, 5.0},
      {5, "rainbow number value and extremal certificate", {"rainbow-number"}, 600.0},
      {6, "Fraenkel law: optimum m+1, one complete pair per witness", {"fraenkel"}, 60.0},
      {7, "edge-graph shadow: triangle-free maximal sets, v <= 5", {"edge-graph"}, 60.0},
      {8, "interval system invariants and escape property at |S|=16, depth 8", {"nwd-system"}, 60.0},
      {9, "transfer construction follows G into every realized interval", {"nwd-transfer"}, 10.0},
      {10, "Cantor-Bendixson rank identity and level pigeonhole", {"cb"}, 30.0},
      {11, "unary characteristic sweeps, 10^4 trials each", {"characteristics"}, 60.0},
      {12, "tooling: round trips and determinism", {"tooling"}, 60.0},
  };

  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const Criterion& cr : criteria) {
    bool pass = true;
    double seconds = 0;
    std::string detail;
    try {
      for (const SuiteResult& suite : rainbow::verify_suites(cr.suites, scale)) {
        seconds += suite.seconds;
        for (const rainbow::CheckItem& item : suite.items) {
          if (!item.pass && detail.empty()) detail = item.name + " - " + item.detail;
          pass = pass && item.pass;
        }
      }
    } catch (const std::exception& e) {
      pass = false;
      detail = e.what();
    }
    if (seconds > cr.budget_seconds) {
      pass = false;
      if (detail.empty())
        detail = "over budget (" + std::to_string(cr.budget_seconds) + "s)";
    }
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", cr.number,
                cr.label.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failed;
  }

  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool within_total = total < 900.0;  // the full run must fit 15 minutes
  std::printf("[%s] total runtime %.2fs (budget 900s)\n", within_total ? "PASS" : "FAIL",
              total);
  if (!within_total) ++failed;
  std::printf("%d/13 checks passed\n", 13 - failed);
  return failed == 0 ? 0 : 1;
}
