#pragma once

#include "crystalrep/domain.hpp"

#include <string>

namespace crystalrep {

// Plain SVG renderings for 2-dimensional groups; anything else throws
// DimensionUnsupported. what is one of:
//   domain        Dirichlet cell of the group with nearby lattice points
//   orbit         orbit of the base point under elements near the origin
//   param-domain  cell R of the dual group with all point group copies
std::string render_svg(const CrystalGroup& g, const std::string& what, const Vec& center);

}  // namespace crystalrep
