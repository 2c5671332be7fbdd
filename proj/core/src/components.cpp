#include "nilcomm/components.hpp"

#include <algorithm>

#include "nilcomm/closure.hpp"
#include "nilcomm/error.hpp"
#include "nilcomm/invariants.hpp"
#include "nilcomm/oracle.hpp"
#include "parallel.hpp"

namespace nilcomm {

namespace {

std::optional<std::string> verified_witness(const AbDiagram& d, PairType type) {
  if (!is_type_a(type)) return std::nullopt;
  const MatrixRealization real = realize(d, type);
  const auto rows = adjacent_rows(real);
  if (!rows) return std::nullopt;
  const IntMatrix e1 = commuting_witness(real, rows->first, rows->second);
  if (!commutator(real.e, e1).is_zero() || !theta_eigen(real, e1, -1)) return std::nullopt;
  const AbDiagram larger = AbDiagram::from_partition(jordan_type(e1));
  const AbDiagram own = AbDiagram::from_partition(d.partition());
  if (larger == own || !leq(own, larger, type)) return std::nullopt;
  return to_text(larger);
}

CandidateStatus status_at(const ClosurePoset& poset, int i, int dim_p) {
  const PairType type = poset.type();
  const AbDiagram& d = poset.diagrams()[i];
  CandidateStatus out;
  out.label = to_text(d);
  out.diagram = d;
  out.defect = poset.defect(i);
  out.component_dim = dim_p - out.defect;
  if (d.empty() || (is_zero_orbit(d) && dim_p > 0)) return out;
  if (is_distinguished(d, type)) {
    out.status = Status::Component;
    return out;
  }
  if (!is_almost_distinguished(d, type)) return out;
  if (auto j = poset.find_reduction(i)) {
    out.status = Status::EliminatedByReduction;
    out.target = to_text(poset.diagrams()[*j]);
  } else if (auto w = verified_witness(d, type)) {
    out.status = Status::EliminatedByWitness;
    out.witness = *w;
  } else {
    out.status = Status::Unresolved;
  }
  return out;
}

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::NonCandidate: return "non-candidate";
    case Status::Component: return "component";
    case Status::EliminatedByReduction: return "eliminated-by-reduction";
    case Status::EliminatedByWitness: return "eliminated-by-witness";
    case Status::Unresolved: return "unresolved";
  }
  return "?";
}

std::string pair_label(PairType type, const PairParams& params) {
  std::string out(to_string(type));
  if (params.signature) {
    out += " p=" + std::to_string(params.signature->count_a) + " q=" + std::to_string(params.signature->count_b);
  } else {
    out += " n=" + std::to_string(params.n);
  }
  return out;
}

ComponentsReport classify_components(PairType type, const PairParams& params, int bound, unsigned threads) {
  const ClosurePoset poset(type, params, bound);
  const int dim_p = ambient_dims(type, params).dim_p;
  std::vector<CandidateStatus> statuses(poset.size());
  detail::parallel_for(poset.size(), [&](int i) { statuses[i] = status_at(poset, i, dim_p); }, threads);

  ComponentsReport report;
  report.pair = pair_label(type, params);
  report.dim_p = dim_p;
  for (CandidateStatus& s : statuses) {
    switch (s.status) {
      case Status::NonCandidate: report.non_candidates.push_back(std::move(s)); break;
      case Status::Component: report.components.push_back(std::move(s)); break;
      case Status::EliminatedByReduction:
      case Status::EliminatedByWitness: report.eliminated.push_back(std::move(s)); break;
      case Status::Unresolved: report.unresolved.push_back(std::move(s)); break;
    }
  }
  return report;
}

CandidateStatus candidate_status(const AbDiagram& diagram, PairType type, int bound) {
  const PairParams params = params_of(diagram, type);
  const auto violations = validate(diagram, type, params);
  if (!violations.empty()) throw Error(violations.front().code, violations.front().detail);
  const ClosurePoset poset(type, params, bound);
  return status_at(poset, poset.index_of(diagram), ambient_dims(type, params).dim_p);
}

std::vector<PairParams> claimed_grid(PairType type) {
  std::vector<PairParams> grid;
  switch (type) {
    case PairType::AI:
      for (int n = 1; n <= 5; ++n) grid.push_back(make_params(type, n));
      break;
    case PairType::AII:
      for (int n = 2; n <= 6; n += 2) grid.push_back(make_params(type, n));
      break;
    case PairType::CI:
      for (int n = 2; n <= 14; n += 2) grid.push_back(make_params(type, n));
      break;
    case PairType::DIII:
      for (int n = 2; n <= 8; n += 2) grid.push_back(make_params(type, n));
      break;
    case PairType::BDI:
      for (int p = 1; p <= 11; ++p)
        for (int q = 1; p + q <= 12; ++q)
          if (std::min(p, q) <= 2 || std::max(p, q) <= 4) grid.push_back(make_params(type, p + q, p, q));
      break;
    case PairType::AIII:
      for (int p = 1; p <= 7; ++p)
        for (int q = 1; p + q <= 8; ++q) grid.push_back(make_params(type, p + q, p, q));
      break;
    case PairType::CII:
      for (int p = 2; p <= 6; p += 2)
        for (int q = 2; p + q <= 8; q += 2) grid.push_back(make_params(type, p + q, p, q));
      break;
  }
  return grid;
}

RankCheck rank_bound_check(PairType type) {
  RankCheck out{type, {}};
  for (const PairParams& params : claimed_grid(type)) {
    const ComponentsReport report = classify_components(type, params);
    if (!report.unresolved.empty())
      throw Error(Errc::ClaimViolated, report.pair + ": unresolved orbit " + report.unresolved.front().label);
    out.verified.push_back(params);
  }
  return out;
}

}  // namespace nilcomm
