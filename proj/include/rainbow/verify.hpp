#pragma once

#include <string>
#include <vector>

#include "rainbow/common.hpp"

namespace rainbow {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;  // counts, first counterexample, ...
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckItem> items;
  double seconds = 0;

  bool pass() const {
    for (const CheckItem& it : items)
      if (!it.pass) return false;
    return true;
  }
};

/// Scales for the verification sweeps; the defaults are the acceptance
/// scales.
struct VerifyScale {
  std::uint64_t seed = 1;

  // tables
  std::size_t tables_max_pk = 20;
  std::size_t tables_max_n = 50;

  // extraction guarantee
  std::size_t exhaustive_max_n = 6;     // canonical sweep of 2-bounded colorings
  std::size_t extract_trials = 10000;   // seeded random colorings
  std::size_t extract_max_n = 200;
  std::size_t pipeline_seeds = 1000;    // full normalize-then-extend pipeline
  std::size_t pipeline_target = 4;

  // pigeonhole
  std::size_t pigeonhole_trials = 10000;
  std::size_t pigeonhole_max_n = 40;

  // classical Ramsey cross-check is fixed-size (all 2-colorings of [6]^2)

  // rainbow number
  std::size_t rainbow_cap = 8;
  std::string data_dir;  // when set, cross-check stored ground truth

  // Fraenkel law
  std::size_t fraenkel_max_m = 5;

  // edge-graph shadow
  std::size_t edge_graph_max_v = 5;

  // interval system
  std::size_t nwd_points = 16;
  std::size_t nwd_depth = 8;
  std::size_t transfer_window = 32;
  std::size_t transfer_seeds = 100;

  // Cantor-Bendixson machinery
  std::size_t cb_exhaustive_nodes = 6;
  std::size_t cb_random_trials = 1000;
  std::size_t cb_level_max_h = 8;

  // unary characteristics sweeps
  std::size_t chars_trials = 10000;
  std::size_t chars_dual_exhaustive_window = 12;
};

SuiteResult verify_tables(const VerifyScale& scale);
SuiteResult verify_extraction(const VerifyScale& scale);
SuiteResult verify_pigeonhole(const VerifyScale& scale);
SuiteResult verify_ramsey(const VerifyScale& scale);
SuiteResult verify_rainbow_number(const VerifyScale& scale);
SuiteResult verify_fraenkel(const VerifyScale& scale);
SuiteResult verify_edge_graph(const VerifyScale& scale);
SuiteResult verify_nwd_system(const VerifyScale& scale);
SuiteResult verify_nwd_transfer(const VerifyScale& scale);
SuiteResult verify_cb(const VerifyScale& scale);
SuiteResult verify_characteristics(const VerifyScale& scale);
SuiteResult verify_tooling(const VerifyScale& scale);

std::vector<SuiteResult> verify_suites(const std::vector<std::string>& names,
                                       const VerifyScale& scale);
std::vector<std::string> verify_suite_names();

}  // namespace rainbow
