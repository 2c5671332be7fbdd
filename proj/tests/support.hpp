#pragma once

#include <string>
#include <vector>

#include "nilcomm/diagram.hpp"
#include "nilcomm/pair.hpp"

namespace testing {

struct Item {
  nilcomm::PairType type;
  nilcomm::PairParams params;
  nilcomm::AbDiagram diagram;
};

// Every nonempty diagram of the given types and sizes, all signatures.
inline std::vector<Item> all_items(const std::vector<nilcomm::PairType>& types, int min_n, int max_n) {
  std::vector<Item> out;
  for (auto t : types)
    for (int n = min_n; n <= max_n; ++n)
      for (const auto& params : nilcomm::params_of_size(t, n))
        for (const auto& d : nilcomm::enumerate_diagrams(t, params))
          if (!d.empty()) out.push_back({t, params, d});
  return out;
}

inline std::vector<nilcomm::PairType> all_types() {
  return {nilcomm::kClassicalTypes.begin(), nilcomm::kClassicalTypes.end()};
}

inline std::string where(const Item& it) {
  return std::string(nilcomm::to_string(it.type)) + " " + nilcomm::to_text(it.diagram);
}

inline nilcomm::AbDiagram D(const char* text) { return nilcomm::parse_diagram(text); }

}  // namespace testing
