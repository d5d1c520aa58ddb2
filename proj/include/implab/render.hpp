#pragma once

#include <string>

#include "implab/sperner.hpp"

namespace implab {

// Static pictures of 2-dimensional boards. Both renderers are deterministic:
// the same input produces the same bytes. Any other dimension is an
// InputError. When labels are given, fully multicolored cells are shaded.
std::string render_svg(const Triangulation& t, const Labeling* labels = nullptr);

// Graphviz source with one node per vertex and one edge per triangle side.
std::string render_dot(const Triangulation& t, const Labeling* labels = nullptr);

}  // namespace implab
