#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilcomm/diagram.hpp"
#include "nilcomm/pair.hpp"

namespace nilcomm {

// Throws Error(ShapeMismatch) when the diagrams have different size, form or signature.
bool leq(const AbDiagram& x, const AbDiagram& y, PairType type);

struct DegenerationEdge {
  AbDiagram lower;
  AbDiagram upper;
  int s = 0;
  int delta = 0;
  bool is_reduction = false;
};

// All diagrams of one (type, params) with the order, covers and cached invariants.
class ClosurePoset {
 public:
  ClosurePoset(PairType type, const PairParams& params, int bound = kDefaultBound);

  PairType type() const { return type_; }
  const PairParams& params() const { return params_; }
  const std::vector<AbDiagram>& diagrams() const { return diagrams_; }
  int size() const { return static_cast<int>(diagrams_.size()); }

  // -1 when absent.
  int index_of(const AbDiagram& d) const;
  bool leq(int i, int j) const;
  std::vector<int> covers_above(int i) const;
  std::vector<int> covers_below(int j) const;
  int dim_p_cent(int i) const { return dim_cent_[i]; }
  int defect(int i) const { return defect_[i]; }

  DegenerationEdge edge(int lower, int upper) const;
  std::vector<DegenerationEdge> hasse() const;
  std::optional<int> find_reduction(int i) const;

 private:
  bool bit(const std::vector<std::uint64_t>& row, int j) const { return (row[j / 64] >> (j % 64)) & 1U; }

  PairType type_;
  PairParams params_;
  std::vector<AbDiagram> diagrams_;
  std::vector<std::vector<std::uint64_t>> up_;    // up_[i] has bit j iff i <= j
  std::vector<std::vector<std::uint64_t>> down_;  // down_[j] has bit i iff i <= j
  std::vector<int> dim_cent_;
  std::vector<int> defect_;
};

std::vector<AbDiagram> minimal_degenerations(const AbDiagram& d, PairType type, int bound = kDefaultBound);

// Pre: x < y, else Error(NotComparable).
bool is_reduction(const AbDiagram& x, const AbDiagram& y, PairType type);
int reduction_order(const AbDiagram& x, const AbDiagram& y, PairType type);

std::optional<AbDiagram> find_reduction(const AbDiagram& d, PairType type, int bound = kDefaultBound);

// BDI/CI only, else Error(WrongType).
bool matches_irreducible_motif(const AbDiagram& d, PairType type);

std::vector<DegenerationEdge> closure_hasse(PairType type, const PairParams& params, int bound = kDefaultBound);

std::string hasse_to_dot(const ClosurePoset& poset);
std::string hasse_to_json(const ClosurePoset& poset);

}  // namespace nilcomm
