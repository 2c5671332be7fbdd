#include "doctest.h"
#include "nilcomm/closure.hpp"
#include "nilcomm/components.hpp"
#include "nilcomm/invariants.hpp"
#include "support.hpp"

using namespace nilcomm;
using testing::D;

namespace {

std::vector<std::string> labels(const std::vector<CandidateStatus>& list) {
  std::vector<std::string> out;
  for (const auto& s : list) out.push_back(s.label);
  return out;
}

}  // namespace

TEST_CASE("AI n = 5") {
  const ComponentsReport r = classify_components(PairType::AI, make_params(PairType::AI, 5));
  CHECK(labels(r.components) == std::vector<std::string>{"5"});
  REQUIRE(r.eliminated.size() == 2);
  CHECK(r.eliminated[0].label == "4,1");
  CHECK(r.eliminated[0].status == Status::EliminatedByReduction);
  CHECK(r.eliminated[1].label == "3,2");
  CHECK(r.eliminated[1].status == Status::EliminatedByWitness);
  CHECK(r.unresolved.empty());
  CHECK(r.min_components() == 1);
  CHECK(r.max_components() == 1);
}

TEST_CASE("AI n = 6 leaves (4,2) open") {
  const ComponentsReport r = classify_components(PairType::AI, make_params(PairType::AI, 6));
  CHECK(labels(r.unresolved) == std::vector<std::string>{"4,2"});
  CHECK(r.max_components() == r.min_components() + 1);
}

TEST_CASE("single-orbit status") {
  CHECK(candidate_status(D("4,2"), PairType::AI).status == Status::Unresolved);
  CHECK(candidate_status(D("3,1"), PairType::AI).status == Status::EliminatedByReduction);
  const CandidateStatus g4 = candidate_status(D("2,2,1,1"), PairType::AII);
  CHECK(g4.status == Status::EliminatedByWitness);
  CHECK(g4.witness == "3,3");
  CHECK(candidate_status(D("ababa"), PairType::BDI).status == Status::Component);
  CHECK(candidate_status(D("aba/a/b"), PairType::BDI).target == "ababa");
  CHECK(candidate_status(D("ababa/aba/bab/a"), PairType::BDI).status == Status::Unresolved);
  CHECK(candidate_status(D("a/a/b"), PairType::BDI).status == Status::NonCandidate);
  CHECK_THROWS_AS(candidate_status(D("abab"), PairType::BDI), Error);
}

TEST_CASE("report invariants on every enumeration up to n = 9") {
  for (PairType t : testing::all_types()) {
    for (int n = 1; n <= 9; ++n) {
      for (const auto& params : params_of_size(t, n)) {
        const ComponentsReport r = classify_components(t, params);
        INFO(r.pair);
        const std::size_t total =
            r.non_candidates.size() + r.components.size() + r.eliminated.size() + r.unresolved.size();
        CHECK(total == enumerate_diagrams(t, params).size());
        for (const auto& s : r.components) {
          CHECK(s.component_dim == r.dim_p);
          CHECK(is_distinguished(*s.diagram, t));
        }
        for (const auto& s : r.eliminated) {
          CHECK(s.component_dim < r.dim_p);
          if (s.status == Status::EliminatedByReduction)
            CHECK(is_reduction(*s.diagram, parse_diagram(*s.target), t));
          if (s.status == Status::EliminatedByWitness) CHECK(is_type_a(t));
        }
        for (const auto& s : r.unresolved) {
          CHECK(s.component_dim < r.dim_p);
          CHECK(is_almost_distinguished(*s.diagram, t));
          CHECK_FALSE(is_distinguished(*s.diagram, t));
        }
        if (t == PairType::AIII || t == PairType::CII || t == PairType::DIII) {
          CHECK(r.eliminated.empty());
          CHECK(r.unresolved.empty());
        }
      }
    }
  }
}

TEST_CASE("reports do not depend on the thread count") {
  for (PairType t : {PairType::CI, PairType::AI}) {
    const PairParams params = make_params(t, 10);
    const ComponentsReport one = classify_components(t, params, kDefaultBound, 1);
    const ComponentsReport four = classify_components(t, params, kDefaultBound, 4);
    CHECK(labels(one.components) == labels(four.components));
    CHECK(labels(one.eliminated) == labels(four.eliminated));
    CHECK(labels(one.unresolved) == labels(four.unresolved));
  }
}

TEST_CASE("claimed rank bounds") {
  for (PairType t : testing::all_types()) {
    const RankCheck check = rank_bound_check(t);
    CHECK(check.verified == claimed_grid(t));
  }
  const auto bdi = claimed_grid(PairType::BDI);
  CHECK(std::find(bdi.begin(), bdi.end(), make_params(PairType::BDI, 8, 4, 4)) != bdi.end());
  CHECK(std::find(bdi.begin(), bdi.end(), make_params(PairType::BDI, 8, 5, 3)) == bdi.end());
}

TEST_CASE("outside the claimed grid") {
  CHECK_FALSE(classify_components(PairType::BDI, make_params(PairType::BDI, 12, 5, 7)).unresolved.empty());
}
