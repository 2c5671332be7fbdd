#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilcomm/components.hpp"

namespace nilcomm {

// Exceptional symmetric pairs: GI, FI, FII, EI ... EIX.
extern const std::vector<std::string> kExceptionalCases;

// Embedded data, tab-separated. Documented in excdata_tables.cpp.
std::string_view exceptional_table_text();
int exceptional_table_version();

struct ExceptionalOrbitRecord {
  std::string case_label;
  int orbit = 0;            // numbering of the source classification
  std::string pair;         // (g^s, k^s)
  int defect = 0;
  std::optional<int> dim_orbit;
  std::string note;

  bool distinguished() const { return defect == 0; }
  bool almost_distinguished() const { return true; }  // every listed orbit is
};

struct ExceptionalReduction {
  std::string case_label;
  int source = 0;
  int source_dim = 0;
  int source_defect = 0;
  int target = 0;
  int target_dim = 0;
  int target_defect = 0;

  bool balanced() const { return source_defect - target_defect == target_dim - source_dim; }
};

struct ExceptionalWitnessFact {
  std::string case_label;
  int source = 0;
  int larger = 0;
};

struct UnresolvedOrbit {
  std::string case_label;
  int orbit = 0;
  std::string k_dynkin;
  std::string g_dynkin;
};

enum class SelfLargeRule { Distinguished, AlmostDistinguished, Regular };

struct ExceptionalCase {
  std::string label;
  std::string real_form;
  int dim_p = 0;
  int published_min = 0;  // component count of the closing table
  int published_max = 0;
  SelfLargeRule selflarge_rule = SelfLargeRule::Distinguished;
  std::vector<int> selflarge_extras;
  std::vector<int> weight_test_exclusions;
  std::vector<ExceptionalOrbitRecord> orbits;
  std::vector<ExceptionalReduction> reductions;
  std::vector<ExceptionalWitnessFact> witnesses;
  std::vector<UnresolvedOrbit> unresolved;
};

// Throws Error(UnknownCase).
const ExceptionalCase& exceptional_case(std::string_view label);
std::vector<ExceptionalOrbitRecord> load_case(std::string_view label);
const std::vector<ExceptionalReduction>& exceptional_reductions(std::string_view label);
const std::vector<ExceptionalWitnessFact>& exceptional_witnesses(std::string_view label);

// Reduction targets missing from the orbit table, with a description.
struct DataDiscrepancy {
  std::string case_label;
  int orbit = 0;
  std::string detail;
};
std::vector<DataDiscrepancy> exceptional_discrepancies(std::string_view label);

ComponentsReport exceptional_components(std::string_view label);

enum class ExceptionalSelfLargeReason { Distinguished, DataTable, Prop74, NotSelfLarge };

struct ExceptionalSelfLarge {
  int orbit = 0;
  bool verdict = false;
  ExceptionalSelfLargeReason reason = ExceptionalSelfLargeReason::Distinguished;
};

// One entry per listed orbit.
std::vector<ExceptionalSelfLarge> exceptional_selflarge_verdicts(std::string_view label);
// Orbit numbers of the self-large orbits.
std::vector<int> exceptional_selflarge(std::string_view label);

}  // namespace nilcomm
