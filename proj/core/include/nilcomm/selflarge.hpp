#pragma once

#include <cstdint>
#include <string_view>

#include "nilcomm/diagram.hpp"
#include "nilcomm/pair.hpp"

namespace nilcomm {

enum class SelfLargeReason {
  Distinguished,
  TorusAndNoDegreeOne,
  AdjacentLengthWitness,
  Prop74,
  DataTable,
  NotAlmostDistinguished,
};

std::string_view to_string(SelfLargeReason reason);

struct SelfLargeVerdict {
  AbDiagram orbit;
  bool verdict = false;
  SelfLargeReason reason = SelfLargeReason::Distinguished;
};

// Combinatorial verdict from the classification table of self-large orbits.
SelfLargeVerdict is_self_large(const AbDiagram& diagram, PairType type);

// p(e,0) = 0, or p(e,0) a torus and p(e,1) = 0; evaluated on the matrix realization.
bool verify_self_large_criterion(const AbDiagram& diagram, PairType type, std::uint64_t seed = 0);

}  // namespace nilcomm
