#include "doctest.h"
#include "nilcomm/excdata.hpp"

#include <algorithm>

using namespace nilcomm;

TEST_CASE("table header") {
  CHECK(exceptional_table_version() == 1);
  CHECK(exceptional_table_text().find("version\t1") != std::string_view::npos);
  CHECK(kExceptionalCases.size() == 12);
}

TEST_CASE("orbit records") {
  const auto gi = load_case("GI");
  REQUIRE(gi.size() == 3);
  for (const auto& r : gi) {
    CHECK(r.pair == "(0, 0)");
    CHECK(r.distinguished());
  }
  const auto e8 = load_case("EVIII");
  const auto it = std::find_if(e8.begin(), e8.end(), [](const auto& r) { return r.orbit == 85; });
  REQUIRE(it != e8.end());
  CHECK(it->pair == "(T1, 0)");
  CHECK(it->defect == 1);
  const auto e4 = load_case("EIV");
  REQUIRE(e4.size() == 2);
  CHECK(e4[0].defect == 1);
  CHECK_FALSE(e4[0].note.empty());
}

TEST_CASE("distinguished counts equal the published component counts") {
  for (const auto& label : kExceptionalCases) {
    const ExceptionalCase& c = exceptional_case(label);
    const auto n = std::count_if(c.orbits.begin(), c.orbits.end(), [](const auto& r) { return r.distinguished(); });
    INFO(label);
    CHECK(n == c.published_min);
  }
}

TEST_CASE("reductions are balanced") {
  for (const auto& label : kExceptionalCases)
    for (const auto& r : exceptional_reductions(label)) {
      INFO(label << " " << r.source);
      CHECK(r.balanced());
      CHECK(r.target_dim > r.source_dim);
    }
  CHECK(exceptional_reductions("EV").size() == 2);
  CHECK(exceptional_reductions("GI").empty());
}

TEST_CASE("component reports") {
  const ComponentsReport e4 = exceptional_components("EIV");
  CHECK(e4.dim_p == 26);
  CHECK(e4.min_components() == 1);
  CHECK(e4.max_components() == 1);
  REQUIRE(e4.eliminated.size() == 1);
  CHECK(e4.eliminated[0].status == Status::EliminatedByWitness);

  const ComponentsReport e1 = exceptional_components("EI");
  CHECK(e1.min_components() == 4);
  CHECK(e1.max_components() == 6);
  CHECK(e1.unresolved.size() == 2);

  for (const auto& label : kExceptionalCases) {
    const ExceptionalCase& c = exceptional_case(label);
    const ComponentsReport r = exceptional_components(label);
    INFO(label);
    CHECK(r.min_components() == c.published_min);
    CHECK(r.max_components() == c.published_max);
    CHECK(r.components.size() + r.eliminated.size() + r.unresolved.size() == c.orbits.size());
  }
}

TEST_CASE("reduction targets absent from the orbit table") {
  const auto e2 = exceptional_discrepancies("EII");
  REQUIRE(e2.size() == 1);
  CHECK(e2[0].orbit == 24);
  const auto e5 = exceptional_discrepancies("EV");
  REQUIRE(e5.size() == 1);
  CHECK(e5[0].orbit == 54);
  CHECK(exceptional_discrepancies("EVIII").empty());
}

TEST_CASE("self-large orbits") {
  const auto e1 = exceptional_selflarge("EI");
  for (int o : {12, 21, 23}) CHECK(std::find(e1.begin(), e1.end(), o) != e1.end());
  for (int o : {16, 17}) CHECK(std::find(e1.begin(), e1.end(), o) == e1.end());
  const auto e8 = exceptional_selflarge("EVIII");
  for (int o : {81, 95}) CHECK(std::find(e8.begin(), e8.end(), o) != e8.end());
  for (int o : {85, 88}) CHECK(std::find(e8.begin(), e8.end(), o) == e8.end());
  CHECK(exceptional_selflarge("EII").size() == load_case("EII").size());
  CHECK(exceptional_selflarge("EIV") == std::vector<int>{2});
  for (const auto& v : exceptional_selflarge_verdicts("EV"))
    if (v.orbit == 50) {
      CHECK_FALSE(v.verdict);
      CHECK(v.reason == ExceptionalSelfLargeReason::Prop74);
    }
}

TEST_CASE("unknown case") {
  try {
    exceptional_case("EX");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownCase);
  }
  CHECK_THROWS_AS(exceptional_components("AI"), Error);
}
