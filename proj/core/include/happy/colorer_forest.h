#pragma once

#include <vector>

#include "happy/graph.h"
#include "happy/lattice.h"

namespace happy {

/// Split of the vertices into a 2-independent set I and a forest T.
struct ForestDecomposition {
  struct Component {
    VertexId root = 0;
    std::vector<VertexId> order;  // BFS from the root, ascending neighbour ids
  };

  std::vector<VertexId> independent;
  std::vector<VertexId> forest;
  std::vector<Component> components;  // ascending root id
  std::vector<VertexId> parent;       // kNoVertex for roots and for I
};

/// Builds the decomposition from I and T; validates the I/T partition,
/// 2-independence of I and acyclicity of G[T].
ForestDecomposition decompose(const LabeledGraph& g, std::vector<VertexId> independent,
                              std::vector<VertexId> forest);

/// Uses the generator's annotations; only 6^3 and 4.8^2 patches carry them.
ForestDecomposition decompose(const LatticePatch& patch);

/// Colors I with 0 and the trees with +-1/+-2 at threshold 1.
ColoringScheme color_forest(const LabeledGraph& g, const ForestDecomposition& d);

}  // namespace happy
