#pragma once

#include <string>
#include <string_view>

#include "nilcomm/components.hpp"
#include "nilcomm/diagram.hpp"
#include "nilcomm/invariants.hpp"
#include "nilcomm/oracle.hpp"
#include "nilcomm/selflarge.hpp"

namespace nilcomm {

// {"text", "rows": [{"length", "start"}]} for lettered diagrams,
// {"text", "partition": [...]} for plain ones.
std::string diagram_to_json(const AbDiagram& diagram);
// Accepts either form above, or a bare string in the text grammar. Throws Error(SyntaxError).
AbDiagram diagram_from_json(std::string_view json);

std::string invariants_to_json(const AbDiagram& diagram, PairType type);
std::string report_to_json(const ComponentsReport& report);
std::string realization_to_json(const MatrixRealization& real);
std::string selflarge_to_json(const SelfLargeVerdict& verdict, PairType type);
std::string exceptional_report_json(std::string_view label);

}  // namespace nilcomm
