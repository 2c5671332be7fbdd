#include "doctest.h"
#include "nilcomm/closure.hpp"
#include "nilcomm/invariants.hpp"
#include "nilcomm/selflarge.hpp"
#include "support.hpp"

using namespace nilcomm;
using testing::D;

TEST_CASE("examples") {
  const auto v5 = is_self_large(D("5"), PairType::AI);
  CHECK(v5.verdict);
  CHECK(v5.reason == SelfLargeReason::Distinguished);

  const auto v31 = is_self_large(D("3,1"), PairType::AI);
  CHECK(v31.verdict);
  CHECK(v31.reason == SelfLargeReason::TorusAndNoDegreeOne);

  const auto v21 = is_self_large(D("2,1"), PairType::AI);
  CHECK_FALSE(v21.verdict);
  CHECK(v21.reason == SelfLargeReason::AdjacentLengthWitness);

  CHECK(to_string(SelfLargeReason::Prop74) == "weight-test");
}

TEST_CASE("table verdict equals the matrix criterion up to n = 8") {
  for (const auto& it : testing::all_items({PairType::AI, PairType::AII, PairType::BDI, PairType::CI}, 1, 8)) {
    if (!is_almost_distinguished(it.diagram, it.type)) continue;
    INFO(testing::where(it));
    CHECK(is_self_large(it.diagram, it.type).verdict == verify_self_large_criterion(it.diagram, it.type));
  }
}

TEST_CASE("distinguished implies self-large implies almost distinguished") {
  for (const auto& it : testing::all_items(testing::all_types(), 1, 10)) {
    const auto v = is_self_large(it.diagram, it.type);
    INFO(testing::where(it));
    if (is_distinguished(it.diagram, it.type)) CHECK(v.verdict);
    if (v.verdict) CHECK(is_almost_distinguished(it.diagram, it.type));
    if (!is_almost_distinguished(it.diagram, it.type)) {
      CHECK_FALSE(v.verdict);
      CHECK(v.reason == SelfLargeReason::NotAlmostDistinguished);
    }
  }
}

TEST_CASE("self-large and reducible at once") {
  const AbDiagram g = D("aba/a/b");
  CHECK(is_self_large(g, PairType::BDI).verdict);
  CHECK(find_reduction(g, PairType::BDI).has_value());
}
