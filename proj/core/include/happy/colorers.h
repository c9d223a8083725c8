#pragma once

#include <string_view>

#include "happy/graph.h"
#include "happy/lattice.h"

namespace happy {

/// Constructive colorer for the patch's lattice: "forest" (6^3, 4.8^2),
/// "patch" (3.12^2, 4.6.12), "linear" (D(3^2.4.3.4), D(3^4.6)) or "auto".
/// Throws InputError when the algorithm does not cover the lattice.
ColoringScheme color_constructively(const LatticePatch& patch, const LabeledGraph& labeled,
                                    std::string_view algorithm = "auto");

/// The algorithm "auto" picks, or empty when none applies.
std::string_view constructive_algorithm(LatticeName name);

}  // namespace happy
