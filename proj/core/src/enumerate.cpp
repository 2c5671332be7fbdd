#include <algorithm>
#include <functional>

#include "nilcomm/diagram.hpp"

namespace nilcomm {

namespace {

// Partitions of n, largest first in lexicographic order: (n), (n-1,1), ...
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      visit(parts);
      return;
    }
    for (int k = std::min(rest, cap); k >= 1; --k) {
      parts.push_back(k);
      rec(rest - k, k);
      parts.pop_back();
    }
  };
  rec(n, n);
}

// Admissible numbers of a-first rows among m rows of length d.
std::vector<int> admissible_a(PairType type, int d, int m) {
  std::vector<int> out;
  const bool even = d % 2 == 0;
  for (int a = m; a >= 0; --a) {
    const int b = m - a;
    bool ok = true;
    switch (type) {
      case PairType::BDI: ok = !even || a == b; break;
      case PairType::CI: ok = even || a == b; break;
      case PairType::DIII: ok = even ? (a % 2 == 0 && b % 2 == 0) : a == b; break;
      case PairType::CII: ok = even ? a == b : (a % 2 == 0 && b % 2 == 0); break;
      default: break;
    }
    if (ok) out.push_back(a);
  }
  return out;
}

}  // namespace

std::vector<AbDiagram> enumerate_diagrams(PairType type, const PairParams& params, int bound) {
  check_params(type, params);
  if (params.n > bound) {
    throw Error(Errc::BoundExceeded, "n = " + std::to_string(params.n) + " exceeds bound " +
                                         std::to_string(bound));
  }
  std::vector<AbDiagram> out;
  if (params.n == 0) {
    out.emplace_back();
    return out;
  }

  for_each_partition(params.n, [&](const std::vector<int>& parts) {
    if (is_plain(type)) {
      AbDiagram d = AbDiagram::from_partition(parts);
      if (is_valid(d, type, params)) out.push_back(std::move(d));
      return;
    }
    std::vector<std::pair<int, int>> groups;  // (length, multiplicity), decreasing length
    for (int len : parts) {
      if (groups.empty() || groups.back().first != len) groups.push_back({len, 0});
      ++groups.back().second;
    }
    std::vector<std::vector<int>> choices;
    for (auto [d, m] : groups) {
      choices.push_back(admissible_a(type, d, m));
      if (choices.back().empty()) return;
    }
    std::vector<Row> rows;
    std::function<void(std::size_t)> rec = [&](std::size_t g) {
      if (g == groups.size()) {
        AbDiagram d = AbDiagram::from_rows(rows);
        if (is_valid(d, type, params)) out.push_back(std::move(d));
        return;
      }
      const auto [len, m] = groups[g];
      for (int a : choices[g]) {
        const std::size_t mark = rows.size();
        for (int i = 0; i < a; ++i) rows.push_back(Row{len, Letter::a});
        for (int i = a; i < m; ++i) rows.push_back(Row{len, Letter::b});
        rec(g + 1);
        rows.resize(mark);
      }
    };
    rec(0);
  });
  return out;
}

}  // namespace nilcomm
