#pragma once

#include <string>
#include <vector>

#include "gridstab/grid.hpp"

namespace gridstab {

// Grid files are JSON:
//   {
//     "nodes": [{"id": 0, "kind": "generator"|"load",
//                "shunt_b": 0.0, "shunt_g": 0.0}, ...],
//     "edges": [{"a": 0, "b": 1, "susceptance": -1.0, "conductance": 0.0}, ...]
//   }
// shunt_b / shunt_g / conductance default to 0; everything else is required.
// Node shunt admittance = shunt_g + j*shunt_b; branch admittance =
// conductance + j*susceptance.  ids must cover 0..n-1; files listing loads
// before generators are accepted, renumbered generators-first, and flagged
// with a warning (edge endpoints are remapped accordingly).  Unknown keys are
// ignored.  Malformed input raises ParseError.
struct ParsedGrid {
  GridSpec grid;
  std::vector<std::string> warnings;
};

ParsedGrid parse_grid_json(const std::string& text);
ParsedGrid load_grid_file(const std::string& path);

std::string grid_to_json(const GridSpec& g);

} // namespace gridstab
