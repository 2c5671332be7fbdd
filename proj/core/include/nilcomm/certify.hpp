#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nilcomm {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // counts on success, first counterexample on failure
  double seconds = 0;
};

CheckResult check_exceptional_counts();
CheckResult check_exceptional_consistency();
CheckResult check_rank_bounds();
CheckResult check_oracle_equivalence(int max_n = 8, std::uint64_t seed = 0);
CheckResult check_degeneration_structure(int max_n_ai = 10, int max_n_aii = 12);
CheckResult check_reduction_examples(int max_n = 10);
CheckResult check_witness_suite(int max_n_witness = 8, int max_n_vanishing = 10);
CheckResult check_selflarge(int max_n = 8, std::uint64_t seed = 0);

// The eight checks in order; seed offsets every randomized trial.
std::vector<CheckResult> run_all_checks(std::uint64_t seed = 0);

}  // namespace nilcomm
