#include <set>

#include "doctest.h"
#include "nilcomm/diagram.hpp"
#include "support.hpp"

using namespace nilcomm;
using testing::D;

namespace {

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

// All partitions, all letter assignments, filtered by validate.
std::set<std::string> brute_force(PairType type, const PairParams& params) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(params.n, params.n, cur, parts);
  std::set<std::string> out;
  for (const auto& p : parts) {
    if (is_plain(type)) {
      const AbDiagram d = AbDiagram::from_partition(p);
      if (is_valid(d, type, params)) out.insert(to_text(d));
      continue;
    }
    for (unsigned mask = 0; mask < (1U << p.size()); ++mask) {
      std::vector<Row> rows;
      for (std::size_t i = 0; i < p.size(); ++i) rows.push_back({p[i], (mask >> i) & 1U ? Letter::b : Letter::a});
      const AbDiagram d = AbDiagram::from_rows(rows);
      if (is_valid(d, type, params)) out.insert(to_text(d));
    }
  }
  return out;
}

int count_of_size(PairType t, int n) {
  int total = 0;
  for (const auto& params : params_of_size(t, n)) total += static_cast<int>(enumerate_diagrams(t, params).size());
  return total;
}

}  // namespace

TEST_CASE("parse examples") {
  const AbDiagram g5 = D("aba/a/b");
  REQUIRE(g5.num_rows() == 3);
  CHECK(g5.rows()[0] == Row{3, Letter::a});
  CHECK(g5.rows()[1] == Row{1, Letter::a});
  CHECK(g5.rows()[2] == Row{1, Letter::b});
  CHECK(D("4,2,1").partition() == std::vector<int>{4, 2, 1});
  CHECK(D("4,2,1").plain());
  CHECK(D("b/aba/a") == g5);
  CHECK(D("-").empty());
  CHECK(D("").empty());
  CHECK(to_text(AbDiagram{}) == "-");
}

TEST_CASE("parse errors") {
  auto code_of = [](const char* text) {
    try {
      parse_diagram(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvariantViolated;
  };
  CHECK(code_of("aab") == Errc::AlternationError);
  CHECK(code_of("ab/x") == Errc::SyntaxError);
  CHECK(code_of("3,,1") == Errc::SyntaxError);
  CHECK(code_of("ab//a") == Errc::SyntaxError);
  CHECK(code_of("0,1") == Errc::SyntaxError);
}

TEST_CASE("validate examples") {
  CHECK(is_valid(D("aba/a/b"), PairType::BDI, make_params(PairType::BDI, 5, 3, 2)));
  CHECK(is_valid(AbDiagram{}, PairType::AI, make_params(PairType::AI, 0)));
  const auto v = validate(D("abab"), PairType::BDI, make_params(PairType::BDI, 4, 2, 2));
  REQUIRE(v.size() == 1);
  CHECK(v[0].code == Errc::ParityViolation);
  CHECK(v[0].length == 4);
  CHECK(validate(D("3,1"), PairType::AII, make_params(PairType::AII, 4))[0].code == Errc::ParityViolation);
  CHECK(validate(D("aba"), PairType::BDI, make_params(PairType::BDI, 3, 1, 2))[0].code == Errc::SignatureMismatch);
  CHECK(validate(D("2,1"), PairType::AI, make_params(PairType::AI, 4))[0].code == Errc::SizeMismatch);
  CHECK(validate(D("ab/a"), PairType::AI, make_params(PairType::AI, 3))[0].code == Errc::FormMismatch);
}

TEST_CASE("enumeration examples") {
  std::vector<std::string> ai3;
  for (const auto& d : enumerate_diagrams(PairType::AI, make_params(PairType::AI, 3))) ai3.push_back(to_text(d));
  CHECK(ai3 == std::vector<std::string>{"3", "2,1", "1,1,1"});
  std::vector<std::string> aii4;
  for (const auto& d : enumerate_diagrams(PairType::AII, make_params(PairType::AII, 4))) aii4.push_back(to_text(d));
  CHECK(aii4 == std::vector<std::string>{"2,2", "1,1,1,1"});
  CHECK(enumerate_diagrams(PairType::AI, make_params(PairType::AI, 0)).size() == 1);
  CHECK_THROWS_AS(enumerate_diagrams(PairType::AI, make_params(PairType::AI, 12), 10), Error);
}

TEST_CASE("enumeration matches the brute-force filter up to n = 10") {
  for (PairType t : testing::all_types()) {
    for (int n = 0; n <= 10; ++n) {
      for (const auto& params : params_of_size(t, n)) {
        std::set<std::string> got;
        for (const auto& d : enumerate_diagrams(t, params)) {
          CHECK(is_valid(d, t, params));
          got.insert(to_text(d));
        }
        CHECK_MESSAGE(got == brute_force(t, params), to_string(t), " n=", n);
      }
    }
  }
}

TEST_CASE("enumeration is sorted, duplicate-free and monotone in n") {
  for (PairType t : testing::all_types()) {
    const int step = (t == PairType::AII || t == PairType::CI || t == PairType::DIII || t == PairType::CII) ? 2 : 1;
    for (int n = step; n + step <= 12; n += step) CHECK(count_of_size(t, n) <= count_of_size(t, n + step));
    for (const auto& params : params_of_size(t, 8)) {
      const auto ds = enumerate_diagrams(t, params);
      for (std::size_t i = 1; i < ds.size(); ++i) CHECK(ds[i - 1] != ds[i]);
    }
  }
}

TEST_CASE("print and parse round trip up to n = 12") {
  for (const auto& it : testing::all_items(testing::all_types(), 0, 12)) {
    CHECK(parse_diagram(to_text(it.diagram)) == it.diagram);
    if (!is_plain(it.type) && it.params.signature) CHECK(it.diagram.signature() == *it.params.signature);
    CHECK(params_of(it.diagram, it.type) == it.params);
  }
}

TEST_CASE("column truncation") {
  CHECK(truncate_columns(D("3,1"), 1).cells == 2);
  const Truncation t = truncate_columns(D("abab/a/b"), 1);
  CHECK(t.count_a == 1);
  CHECK(t.count_b == 2);
  const Truncation id = truncate_columns(D("abab/a/b"), 0);
  CHECK(id.count_a == 3);
  CHECK(id.count_b == 3);
  CHECK(id.cells == 6);
  for (const auto& it : testing::all_items(testing::all_types(), 1, 8)) {
    for (int j = 0; j <= 3; ++j) {
      for (int k = 0; k <= 3; ++k) {
        const Truncation direct = truncate_columns(it.diagram, j + k);
        const Truncation nested = truncate_columns(truncate_columns(it.diagram, j), k);
        CHECK(direct.cells == nested.cells);
        if (it.diagram.plain()) continue;
        CHECK(direct.count_a == nested.count_a);
        CHECK(direct.count_b == nested.count_b);
      }
    }
  }
}

TEST_CASE("strip common rows") {
  auto [x, y] = strip_common_rows(D("3,2,1"), D("3,3"));
  CHECK(to_text(x) == "2,1");
  CHECK(to_text(y) == "3");
  auto [u, v] = strip_common_rows(D("aba/a/b"), D("ababa"));
  CHECK(u == D("aba/a/b"));
  CHECK(v == D("ababa"));
  auto [p, q] = strip_common_rows(D("ababa/aba/bab/b"), D("ababa/ababa/b/b"));
  CHECK(p == D("aba/bab"));
  CHECK(q == D("ababa/b"));
}
