#include "happy/colorers.h"

#include "happy/colorer_forest.h"
#include "happy/colorer_linear.h"
#include "happy/colorer_patch.h"

namespace happy {

std::string_view constructive_algorithm(LatticeName name) {
  switch (name) {
    case LatticeName::k6_3:
    case LatticeName::k4_8_2: return "forest";
    case LatticeName::k3_12_2:
    case LatticeName::k4_6_12: return "patch";
    case LatticeName::kD3_2_4_3_4:
    case LatticeName::kD3_4_6: return "linear";
    default: return "";
  }
}

ColoringScheme color_constructively(const LatticePatch& patch, const LabeledGraph& labeled,
                                    std::string_view algorithm) {
  const std::string_view natural = constructive_algorithm(patch.name);
  if (algorithm == "auto") algorithm = natural;
  if (algorithm.empty()) throw InputError("no constructive colorer for " + to_string(patch.name));
  if (algorithm != natural)
    throw InputError("algorithm '" + std::string(algorithm) + "' does not apply to " + to_string(patch.name));
  if (algorithm == "forest") {
    require_same_topology(patch.graph, labeled);
    return color_forest(labeled, decompose(patch));
  }
  if (algorithm == "patch") return color_lattice_patchwise(patch, labeled);
  return color_lattice_linear(patch, labeled);
}

}  // namespace happy
