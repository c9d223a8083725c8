#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "happy/graph.h"
#include "happy/lattice.h"
#include "happy/solver.h"

namespace happy {

using Json = nlohmann::json;

/// {"version":1,"vertex_count":N,"edges":[[u,v,"N"|"F"],...]}
Json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const Json& j);

struct ColoringFile {
  Coloring coloring;
  std::optional<std::int64_t> t;
};

/// {"colors":[...],"t":t}; t omitted when absent.
Json coloring_to_json(const Coloring& c, std::optional<std::int64_t> t = std::nullopt);
ColoringFile coloring_from_json(const Json& j);

/// Graph format plus "lattice", "rows", "cols", "coords", "keys" and
/// "annotations" (absent annotation kinds are omitted).
Json patch_to_json(const LatticePatch& p);
LatticePatch patch_from_json(const Json& j);

/// Labels for a fixed topology: either a graph file with the same edges or
/// {"labels":["N","F",...]} in canonical edge order.
LabeledGraph labels_from_json(const Json& j, const LabeledGraph& topology);

/// {"colors":[...],"t":t,"r":r,"algorithm":"..."}
Json scheme_to_json(const ColoringScheme& s);

/// {"status":...,"t":...,"colors":[...],"nodes":...}; t and colors are null
/// without a witness.
Json solve_result_to_json(const SolveResult& r);
Json min_colors_to_json(const MinColorsResult& r);

/// Reads a JSON file ("-" for stdin). Parse failures become InputError.
Json read_json_file(const std::string& path);
/// Writes pretty JSON ("-" for stdout).
void write_json_file(const std::string& path, const Json& j);

}  // namespace happy
