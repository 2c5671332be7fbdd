#include "nilcomm/selflarge.hpp"

#include "nilcomm/invariants.hpp"
#include "nilcomm/oracle.hpp"

namespace nilcomm {

namespace {

// Distinct row lengths pairwise at distance >= 2.
bool gaps_at_least_two(const AbDiagram& d) {
  const auto lengths = d.occupied_lengths();
  for (std::size_t i = 1; i < lengths.size(); ++i)
    if (lengths[i - 1] - lengths[i] < 2) return false;
  return true;
}

}  // namespace

std::string_view to_string(SelfLargeReason reason) {
  switch (reason) {
    case SelfLargeReason::Distinguished: return "distinguished";
    case SelfLargeReason::TorusAndNoDegreeOne: return "torus-and-no-degree-one";
    case SelfLargeReason::AdjacentLengthWitness: return "adjacent-length-witness";
    case SelfLargeReason::Prop74: return "weight-test";
    case SelfLargeReason::DataTable: return "data-table";
    case SelfLargeReason::NotAlmostDistinguished: return "not-almost-distinguished";
  }
  return "?";
}

SelfLargeVerdict is_self_large(const AbDiagram& diagram, PairType type) {
  SelfLargeVerdict v{diagram, true, SelfLargeReason::Distinguished};
  if (diagram.empty() || is_distinguished(diagram, type)) return v;
  if (!is_almost_distinguished(diagram, type)) return {diagram, false, SelfLargeReason::NotAlmostDistinguished};
  switch (type) {
    case PairType::AI:
    case PairType::AII:
      if (gaps_at_least_two(diagram)) return {diagram, true, SelfLargeReason::TorusAndNoDegreeOne};
      return {diagram, false, SelfLargeReason::AdjacentLengthWitness};
    case PairType::BDI:
    case PairType::CI:
      return {diagram, true, SelfLargeReason::DataTable};
    case PairType::AIII:
    case PairType::CII:
    case PairType::DIII:
      break;
  }
  return {diagram, false, SelfLargeReason::DataTable};
}

bool verify_self_large_criterion(const AbDiagram& diagram, PairType type, std::uint64_t seed) {
  if (diagram.empty()) return true;
  const MatrixRealization real = realize(diagram, type);
  const GradedDims dims = centralizer_dims(real);
  if (dims.dim_p(0) == 0) return true;
  return dims.dim_p(1) == 0 && p0_is_torus(real, seed);
}

}  // namespace nilcomm
