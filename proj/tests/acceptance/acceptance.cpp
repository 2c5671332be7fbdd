// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <iomanip>
#include <iostream>

#include "nilcomm/certify.hpp"

int main() {
  using namespace nilcomm;
  const std::vector<CheckResult> results = {
      check_exceptional_counts(),     check_exceptional_consistency(), check_rank_bounds(),
      check_oracle_equivalence(8, 0), check_degeneration_structure(10, 12), check_reduction_examples(10),
      check_witness_suite(8, 10),     check_selflarge(8, 0)};
  bool ok = true;
  for (const CheckResult& r : results) {
    if (r.id == 1 && r.seconds >= 1.0) {
      std::cout << "FAIL criterion 1: " << r.name << ": took " << r.seconds << " s, limit 1 s\n";
      ok = false;
      continue;
    }
    ok = ok && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << ": " << r.detail
              << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)" << std::endl;
  }
  return ok ? 0 : 1;
}
