#include "doctest.h"
#include "nilcomm/closure.hpp"
#include "nilcomm/invariants.hpp"
#include "nilcomm/oracle.hpp"
#include "support.hpp"

using namespace nilcomm;
using testing::D;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvariantViolated;
}

void fillings(int n, int max_part, std::vector<int>& cur, std::vector<AbDiagram>& out) {
  if (n == 0) {
    for (unsigned mask = 0; mask < (1U << cur.size()); ++mask) {
      std::vector<Row> rows;
      for (std::size_t i = 0; i < cur.size(); ++i) rows.push_back({cur[i], (mask >> i) & 1U ? Letter::b : Letter::a});
      out.push_back(AbDiagram::from_rows(rows));
    }
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    fillings(n - k, k, cur, out);
    cur.pop_back();
  }
}

bool adjacent(const AbDiagram& d) {
  const auto l = d.occupied_lengths();
  for (std::size_t i = 1; i < l.size(); ++i)
    if (l[i - 1] - l[i] == 1) return true;
  return false;
}

}  // namespace

TEST_CASE("realization examples") {
  const MatrixRealization ai = realize(D("2,1"), PairType::AI);
  CHECK(ai.n == 3);
  CHECK(ai.e.rows() == 3);
  CHECK_NOTHROW(check_realization(ai));
  const MatrixRealization bdi = realize(D("aba/a/b"), PairType::BDI);
  CHECK(bdi.n == 5);
  REQUIRE(bdi.J.has_value());
  long long trace = 0;
  for (int i = 0; i < 5; ++i) trace += (*bdi.J)(i, i);
  CHECK(trace == 1);
  CHECK(code_of([] { realize(D("abab"), PairType::BDI); }) == Errc::UnrealizableDiagram);
}

TEST_CASE("realizable fillings are exactly the valid shapes up to n = 8") {
  for (PairType t : {PairType::BDI, PairType::CI, PairType::CII, PairType::DIII}) {
    for (int n = 1; n <= 8; ++n) {
      std::vector<AbDiagram> all;
      std::vector<int> cur;
      fillings(n, n, cur, all);
      std::sort(all.begin(), all.end());
      all.erase(std::unique(all.begin(), all.end()), all.end());
      for (const AbDiagram& d : all) {
        INFO(to_string(t), " ", to_text(d));
        const bool shape = validate_shape(d, t).empty();
        CHECK(realizable_by_form_space(d, t, 1) == shape);
        bool built = true;
        try {
          realize(d, t);
        } catch (const Error& e) {
          built = false;
          CHECK(e.code() == Errc::UnrealizableDiagram);
        }
        CHECK(built == shape);
      }
    }
  }
}

TEST_CASE("realizations carry their diagram") {
  for (const auto& it : testing::all_items(testing::all_types(), 1, 10)) {
    INFO(testing::where(it));
    const MatrixRealization real = realize(it.diagram, it.type);
    CHECK(jordan_type(real.e) == it.diagram.partition());
    if (it.diagram.size() <= 8) CHECK_NOTHROW(check_realization(real));
    if (!is_plain(it.type) && it.diagram.size() <= 8) {
      for (int k = 0; k < real.n; ++k) {
        if (real.tags[k].power != 0) continue;
        const Row& row = it.diagram.rows()[real.tags[k].row];
        CHECK(real.signs[k] == (row.start == Letter::a ? 1 : -1));
      }
    }
  }
}

TEST_CASE("centralizer examples") {
  CHECK(centralizer_dims(realize(D("3"), PairType::AI)).dim_p_cent() == 2);
  const GradedDims g5 = centralizer_dims(realize(D("aba/a/b"), PairType::BDI));
  CHECK(g5.dim_p(0) == 1);
  CHECK(g5.dim_p_cent() == 3);
  CHECK(centralizer_dims(realize(D("2,1"), PairType::AI)).dim_p(1) == 1);
}

TEST_CASE("randomized defect") {
  CHECK(defect_oracle(realize(D("3"), PairType::AI)).value == 0);
  CHECK(defect_oracle(realize(D("2,1"), PairType::AI)).value == 1);
  CHECK(defect_oracle(realize(D("ababa/aba/bab/a"), PairType::BDI)).value == 1);
  const MatrixRealization real = realize(D("ab/ba/a/b"), PairType::BDI);
  CHECK(defect_oracle(real, 9).trials == defect_oracle(real, 9).trials);
}

TEST_CASE("jordan type") {
  CHECK(jordan_type(IntMatrix(3, 3)) == std::vector<int>{1, 1, 1});
  CHECK(jordan_type(realize(D("2,1"), PairType::AI).e) == std::vector<int>{2, 1});
  CHECK(code_of([] { jordan_type(IntMatrix::identity(2)); }) == Errc::NotNilpotent);
}

TEST_CASE("commuting witness examples") {
  const MatrixRealization ai = realize(D("2,1"), PairType::AI);
  const IntMatrix e1 = commuting_witness(ai, 1, 0);
  CHECK(jordan_type(e1) == std::vector<int>{3});
  const MatrixRealization aii = realize(D("2,2,1,1"), PairType::AII);
  const auto rows = adjacent_rows(aii);
  REQUIRE(rows.has_value());
  CHECK(jordan_type(commuting_witness(aii, rows->first, rows->second)) == std::vector<int>{3, 3});
  const MatrixRealization gap = realize(D("3,1"), PairType::AI);
  CHECK_FALSE(adjacent_rows(gap).has_value());
  CHECK(code_of([&] { commuting_witness(gap, 1, 0); }) == Errc::NoAdjacentLengths);
  CHECK(code_of([] { commuting_witness(realize(D("aba/a/b"), PairType::BDI), 1, 0); }) == Errc::WrongType);
}

TEST_CASE("witness soundness on every adjacent-length candidate up to n = 8") {
  for (const auto& it : testing::all_items({PairType::AI, PairType::AII}, 1, 8)) {
    if (!adjacent(it.diagram)) continue;
    INFO(testing::where(it));
    const MatrixRealization real = realize(it.diagram, it.type);
    const auto rows = adjacent_rows(real);
    REQUIRE(rows.has_value());
    const IntMatrix e1 = commuting_witness(real, rows->first, rows->second);
    CHECK(commutator(real.e, e1).is_zero());
    CHECK(theta_eigen(real, e1, -1));
    const AbDiagram own = AbDiagram::from_partition(it.diagram.partition());
    const AbDiagram larger = AbDiagram::from_partition(jordan_type(e1));
    CHECK(own != larger);
    CHECK(leq(own, larger, PairType::AI));
  }
}

TEST_CASE("no adjacent lengths means g(e,1) = 0 on type A up to n = 10") {
  int tested = 0;
  for (const auto& it : testing::all_items({PairType::AI, PairType::AII, PairType::AIII}, 1, 10)) {
    const MatrixRealization real = realize(it.diagram, it.type);
    const int g1 = centralizer_dim(real, 1, Part::g);
    if (!adjacent(it.diagram)) {
      ++tested;
      CHECK_MESSAGE(g1 == 0, testing::where(it));
    }
  }
  CHECK(tested > 100);
}

TEST_CASE("weight test for self-large") {
  CHECK(selflarge_test_7_4(realize(D("2,1"), PairType::AI)) == Test74::applies);
  CHECK(selflarge_test_7_4(realize(D("3,1"), PairType::AI)) == Test74::not_applies);
  CHECK(code_of([] { selflarge_test_7_4(realize(D("3"), PairType::AI)); }) == Errc::NotAlmostDistinguished);
}
