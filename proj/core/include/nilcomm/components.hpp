#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilcomm/diagram.hpp"
#include "nilcomm/pair.hpp"

namespace nilcomm {

enum class Status { NonCandidate, Component, EliminatedByReduction, EliminatedByWitness, Unresolved };

std::string_view to_string(Status status);

struct CandidateStatus {
  std::string label;                 // diagram text or "O<number>"
  std::optional<AbDiagram> diagram;  // classical orbits
  std::optional<int> orbit;          // exceptional orbits
  Status status = Status::NonCandidate;
  int defect = 0;
  int component_dim = 0;
  std::optional<std::string> target;   // reduction target
  std::optional<std::string> witness;  // diagram or orbit of the commuting element
};

struct ComponentsReport {
  std::string pair;  // "AI n=5", "BDI p=3 q=2", "EV"
  int dim_p = 0;
  std::vector<CandidateStatus> non_candidates;
  std::vector<CandidateStatus> components;
  std::vector<CandidateStatus> eliminated;
  std::vector<CandidateStatus> unresolved;

  int min_components() const { return static_cast<int>(components.size()); }
  int max_components() const { return min_components() + static_cast<int>(unresolved.size()); }
};

// threads = 0 picks the hardware concurrency. Output does not depend on it.
ComponentsReport classify_components(PairType type, const PairParams& params, int bound = kDefaultBound,
                                     unsigned threads = 0);

CandidateStatus candidate_status(const AbDiagram& diagram, PairType type, int bound = kDefaultBound);

struct RankCheck {
  PairType type;
  std::vector<PairParams> verified;
};

// Runs classify_components over the grid where the rank bound is claimed.
// Throws Error(ClaimViolated) naming the pair and orbit.
RankCheck rank_bound_check(PairType type);

// The claimed grid: AI n<=5, AII n<=6, BDI min(p,q)<=2 or max<=4 with n<=12,
// CI n<=14, AIII/CII/DIII n<=8.
std::vector<PairParams> claimed_grid(PairType type);

std::string pair_label(PairType type, const PairParams& params);

}  // namespace nilcomm
