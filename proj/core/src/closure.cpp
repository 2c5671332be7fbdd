#include "nilcomm/closure.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "json.hpp"
#include "nilcomm/invariants.hpp"

namespace nilcomm {

namespace {

// Column-truncation profile: (cells) for plain, (count_a, count_b) otherwise.
std::vector<int> profile(const AbDiagram& d) {
  std::vector<int> out;
  for (int k = 0; k < d.max_length(); ++k) {
    const Truncation t = truncate_columns(d, k);
    if (d.plain()) {
      out.push_back(t.cells);
    } else {
      out.push_back(t.count_a);
      out.push_back(t.count_b);
    }
  }
  return out;
}

bool profile_leq(const std::vector<int>& x, const std::vector<int>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int yi = i < y.size() ? y[i] : 0;
    if (x[i] > yi) return false;
  }
  return true;
}

void check_shape(const AbDiagram& x, const AbDiagram& y) {
  if (x.size() != y.size()) throw Error(Errc::ShapeMismatch, "diagrams differ in size");
  if (x.empty() || y.empty()) return;
  if (x.plain() != y.plain()) throw Error(Errc::ShapeMismatch, "plain and lettered diagrams mixed");
  if (!x.plain() && x.signature() != y.signature())
    throw Error(Errc::ShapeMismatch, "diagrams differ in signature");
}

int safe_defect(const AbDiagram& d, PairType type) { return d.empty() ? 0 : defect(d, type); }

AbDiagram require_valid(const AbDiagram& d, PairType type) {
  const auto violations = validate(d, type, params_of(d, type));
  if (!violations.empty()) throw Error(violations.front().code, violations.front().detail);
  return d;
}

}  // namespace

bool leq(const AbDiagram& x, const AbDiagram& y, PairType) {
  check_shape(x, y);
  return profile_leq(profile(x), profile(y));
}

ClosurePoset::ClosurePoset(PairType type, const PairParams& params, int bound)
    : type_(type), params_(params), diagrams_(enumerate_diagrams(type, params, bound)) {
  const int n = size();
  const int words = (n + 63) / 64;
  std::vector<std::vector<int>> prof;
  prof.reserve(n);
  for (const AbDiagram& d : diagrams_) {
    prof.push_back(profile(d));
    dim_cent_.push_back(nilcomm::dim_p_cent(d, type));
    defect_.push_back(safe_defect(d, type));
  }
  up_.assign(n, std::vector<std::uint64_t>(words, 0));
  down_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j || profile_leq(prof[i], prof[j])) {
        up_[i][j / 64] |= std::uint64_t{1} << (j % 64);
        down_[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
}

int ClosurePoset::index_of(const AbDiagram& d) const {
  auto it = std::find(diagrams_.begin(), diagrams_.end(), d);
  return it == diagrams_.end() ? -1 : static_cast<int>(it - diagrams_.begin());
}

bool ClosurePoset::leq(int i, int j) const { return bit(up_[i], j); }

std::vector<int> ClosurePoset::covers_above(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j) {
    if (j == i || !bit(up_[i], j)) continue;
    int between = 0;
    for (std::size_t w = 0; w < up_[i].size(); ++w) between += std::popcount(up_[i][w] & down_[j][w]);
    if (between == 2) out.push_back(j);
  }
  return out;
}

std::vector<int> ClosurePoset::covers_below(int j) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (i == j || !bit(down_[j], i)) continue;
    int between = 0;
    for (std::size_t w = 0; w < up_[i].size(); ++w) between += std::popcount(up_[i][w] & down_[j][w]);
    if (between == 2) out.push_back(i);
  }
  return out;
}

DegenerationEdge ClosurePoset::edge(int lower, int upper) const {
  DegenerationEdge e{diagrams_[lower], diagrams_[upper]};
  e.s = dim_cent_[lower] - dim_cent_[upper];
  e.delta = defect_[lower] - defect_[upper];
  e.is_reduction = e.s == e.delta;
  return e;
}

std::vector<DegenerationEdge> ClosurePoset::hasse() const {
  std::vector<DegenerationEdge> out;
  for (int i = 0; i < size(); ++i)
    for (int j : covers_above(i)) out.push_back(edge(i, j));
  return out;
}

std::optional<int> ClosurePoset::find_reduction(int i) const {
  for (int j : covers_above(i)) {
    if (edge(i, j).is_reduction) return j;
  }
  return std::nullopt;
}

std::vector<AbDiagram> minimal_degenerations(const AbDiagram& d, PairType type, int bound) {
  require_valid(d, type);
  ClosurePoset poset(type, params_of(d, type), bound);
  std::vector<AbDiagram> out;
  for (int j : poset.covers_above(poset.index_of(d))) out.push_back(poset.diagrams()[j]);
  return out;
}

bool is_reduction(const AbDiagram& x, const AbDiagram& y, PairType type) {
  return reduction_order(x, y, type) == dim_p_cent(x, type) - dim_p_cent(y, type);
}

int reduction_order(const AbDiagram& x, const AbDiagram& y, PairType type) {
  if (x == y || !leq(x, y, type)) throw Error(Errc::NotComparable, to_text(x) + " is not below " + to_text(y));
  return safe_defect(x, type) - safe_defect(y, type);
}

std::optional<AbDiagram> find_reduction(const AbDiagram& d, PairType type, int bound) {
  require_valid(d, type);
  ClosurePoset poset(type, params_of(d, type), bound);
  if (auto j = poset.find_reduction(poset.index_of(d))) return poset.diagrams()[*j];
  return std::nullopt;
}

bool matches_irreducible_motif(const AbDiagram& d, PairType type) {
  if (type != PairType::BDI && type != PairType::CI)
    throw Error(Errc::WrongType, "motifs are defined for BDI and CI");
  const int base = type == PairType::BDI ? 1 : 2;
  auto pure = [&](int len) { return d.multiplicity(len) > 0 && (d.a(len) == 0 || d.b(len) == 0); };
  auto letter = [&](int len) { return d.a(len) > 0 ? Letter::a : Letter::b; };
  const auto lengths = d.occupied_lengths();
  for (int len : lengths) {
    if (len % 2 != base % 2 || d.a(len) == 0 || d.b(len) == 0) continue;
    bool inside = false;
    if (len > base) {
      inside = pure(len - 2) && pure(len + 2) && letter(len - 2) == letter(len + 2);
    } else if (type == PairType::BDI) {
      int next = 0;
      for (int other : lengths)
        if (other > len && (next == 0 || other < next)) next = other;
      if (next == 0) {
        inside = true;
      } else if (pure(next)) {
        inside = d.multiplicity(next) >= 2 || (pure(next + 2) && letter(next + 2) != letter(next));
      }
    }
    if (!inside) return false;
  }
  return true;
}

std::vector<DegenerationEdge> closure_hasse(PairType type, const PairParams& params, int bound) {
  return ClosurePoset(type, params, bound).hasse();
}

std::string hasse_to_dot(const ClosurePoset& poset) {
  const int dim_p = ambient_dims(poset.type(), poset.params()).dim_p;
  std::ostringstream out;
  out << "digraph closure {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (int i = 0; i < poset.size(); ++i) {
    out << "  n" << i << " [label=\"" << to_text(poset.diagrams()[i]) << "\\n("
        << dim_p - poset.dim_p_cent(i) << ", " << poset.defect(i) << ")\"];\n";
  }
  for (int i = 0; i < poset.size(); ++i) {
    for (int j : poset.covers_above(i)) {
      const DegenerationEdge e = poset.edge(i, j);
      out << "  n" << i << " -> n" << j << " [label=\"s=" << e.s << " d=" << e.delta << "\"";
      if (e.is_reduction) out << ", color=red, style=bold";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string hasse_to_json(const ClosurePoset& poset) {
  using nlohmann::json;
  const int dim_p = ambient_dims(poset.type(), poset.params()).dim_p;
  json nodes = json::array();
  for (int i = 0; i < poset.size(); ++i) {
    nodes.push_back({{"id", i},
                     {"diagram", to_text(poset.diagrams()[i])},
                     {"dim_orbit", dim_p - poset.dim_p_cent(i)},
                     {"defect", poset.defect(i)}});
  }
  json edges = json::array();
  for (int i = 0; i < poset.size(); ++i) {
    for (int j : poset.covers_above(i)) {
      const DegenerationEdge e = poset.edge(i, j);
      edges.push_back({{"lower", to_text(e.lower)},
                       {"upper", to_text(e.upper)},
                       {"s", e.s},
                       {"delta", e.delta},
                       {"reduction", e.is_reduction}});
    }
  }
  json doc = {{"type", std::string(to_string(poset.type()))},
              {"n", poset.params().n},
              {"nodes", nodes},
              {"edges", edges}};
  if (poset.params().signature)
    doc["signature"] = {poset.params().signature->count_a, poset.params().signature->count_b};
  return doc.dump(2) + "\n";
}

}  // namespace nilcomm
