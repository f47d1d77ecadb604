#pragma once

#include "crystalrep/crystal.hpp"

#include "json.hpp"

#include <string>

namespace crystalrep {

// JSON description of a group. Two forms:
//
//   { "builtin": "pg" }
//
//   {
//     "name": "pg",
//     "dimension": 2,
//     "lattice_basis": [[1,0],[0,1]],                 rows of B
//     "point_group_generators": [ [[1,0],[0,-1]] ],
//     "cross_section": [ { "element": [[1,0],[0,-1]], "x": [0.5,0] } ]
//   }
//
// Generators are saturated to the full point group (at most 96 elements);
// "point_group_elements" may be given instead to pin the element order.
// Cross-section entries are matched to elements by matrix value; omitted
// elements get x = 0. Malformed JSON or wrong shapes raise ParseError,
// closure failures raise PointGroupNotClosed, and anything rejected by the
// group constructor is rethrown as ValidationError with the original tag in
// the message.
CrystalGroup parse_group_spec(const std::string& text);
CrystalGroup parse_group_spec_json(const nlohmann::json& j);

// Full form with the element list written out; parses back to an
// element-wise identical group.
nlohmann::json serialize_group(const CrystalGroup& g);

// CLI convenience: a catalog name, or a path to a JSON file.
CrystalGroup load_group_arg(const std::string& arg);

}  // namespace crystalrep
