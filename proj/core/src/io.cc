#include "happy/io.h"

#include <fstream>
#include <iostream>
#include <sstream>

namespace happy {
namespace {

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("field \"") + key + "\": " + e.what());
  }
}

template <typename T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

Json ids(const std::vector<VertexId>& v) { return Json(v); }

std::vector<VertexId> ids_from(const Json& j, const char* what) { return as<std::vector<VertexId>>(j, what); }

Json annotations_to_json(const StructuralAnnotations& a) {
  Json out = Json::object();
  if (a.independent_set) out["independent_set"] = ids(*a.independent_set);
  if (a.forest_vertices) out["forest_vertices"] = ids(*a.forest_vertices);
  if (a.patch_cells) {
    Json cells = Json::array();
    for (const PatchCell& c : *a.patch_cells) cells.push_back({{"row", c.row}, {"col", c.col}, {"roles", c.roles}});
    out["patch_cells"] = std::move(cells);
  }
  if (a.matching_pairs) {
    Json pairs = Json::array();
    for (const MatchingPair& p : *a.matching_pairs) pairs.push_back({{"u", p.u}, {"v", p.v}, {"w", p.w}});
    out["matching_pairs"] = std::move(pairs);
  }
  if (a.grid_faces) {
    Json faces = Json::array();
    for (const GridFace& f : *a.grid_faces) {
      faces.push_back({{"kind", f.kind == GridFace::Kind::kHorizontal ? "horizontal" : "vertical"},
                       {"corners", f.corners},
                       {"pair", f.pair}});
    }
    out["grid_faces"] = std::move(faces);
  }
  return out;
}

StructuralAnnotations annotations_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("\"annotations\" must be an object");
  StructuralAnnotations a;
  if (j.contains("independent_set")) a.independent_set = ids_from(j["independent_set"], "independent_set");
  if (j.contains("forest_vertices")) a.forest_vertices = ids_from(j["forest_vertices"], "forest_vertices");
  if (j.contains("patch_cells")) {
    a.patch_cells.emplace();
    for (const Json& c : j["patch_cells"]) {
      a.patch_cells->push_back({get<int>(c, "row"), get<int>(c, "col"), get<std::vector<VertexId>>(c, "roles")});
    }
  }
  if (j.contains("matching_pairs")) {
    a.matching_pairs.emplace();
    for (const Json& p : j["matching_pairs"]) {
      a.matching_pairs->push_back(
          {get<VertexId>(p, "u"), get<VertexId>(p, "v"), get<std::array<VertexId, 4>>(p, "w")});
    }
  }
  if (j.contains("grid_faces")) {
    a.grid_faces.emplace();
    for (const Json& f : j["grid_faces"]) {
      const auto kind = get<std::string>(f, "kind");
      if (kind != "horizontal" && kind != "vertical") throw InputError("grid face kind must be horizontal or vertical");
      a.grid_faces->push_back({kind == "horizontal" ? GridFace::Kind::kHorizontal : GridFace::Kind::kVertical,
                               get<std::array<VertexId, 4>>(f, "corners"), get<std::size_t>(f, "pair")});
    }
  }
  return a;
}

}  // namespace

Json graph_to_json(const LabeledGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, std::string(1, to_char(e.label))});
  return {{"version", 1}, {"vertex_count", g.vertex_count()}, {"edges", std::move(edges)}};
}

LabeledGraph graph_from_json(const Json& j) {
  if (j.is_object() && j.contains("version") && get<int>(j, "version") != 1)
    throw InputError("unsupported graph file version");
  const auto n = get<std::size_t>(j, "vertex_count");
  const Json& list = j.at("edges");
  if (!list.is_array()) throw InputError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const Json& e : list) {
    if (!e.is_array() || e.size() != 3) throw InputError("each edge must be [u, v, \"N\"|\"F\"]");
    edges.push_back({as<VertexId>(e[0], "edge endpoint"), as<VertexId>(e[1], "edge endpoint"),
                     label_from_string(as<std::string>(e[2], "edge label"))});
  }
  return LabeledGraph(n, std::move(edges));
}

Json coloring_to_json(const Coloring& c, std::optional<std::int64_t> t) {
  Json out{{"colors", c.colors}};
  if (t) out["t"] = *t;
  return out;
}

ColoringFile coloring_from_json(const Json& j) {
  ColoringFile out;
  out.coloring.colors = get<std::vector<Color>>(j, "colors");
  if (j.contains("t") && !j["t"].is_null()) out.t = get<std::int64_t>(j, "t");
  return out;
}

Json patch_to_json(const LatticePatch& p) {
  Json out = graph_to_json(p.graph);
  out["lattice"] = to_string(p.name);
  out["rows"] = p.params.rows;
  out["cols"] = p.params.cols;
  Json coords = Json::array();
  for (const Vec2& c : p.coords) coords.push_back({c.x, c.y});
  out["coords"] = std::move(coords);
  Json keys = Json::array();
  for (const SiteRef& k : p.keys) keys.push_back({k.site, k.dx, k.dy});
  out["keys"] = std::move(keys);
  out["annotations"] = annotations_to_json(p.annotations);
  return out;
}

LatticePatch patch_from_json(const Json& j) {
  LatticePatch p;
  p.graph = graph_from_json(j);
  p.name = parse_lattice(get<std::string>(j, "lattice"));
  p.params = {get<int>(j, "rows"), get<int>(j, "cols")};
  for (const Json& c : j.at("coords")) {
    const auto xy = as<std::array<double, 2>>(c, "coordinate");
    p.coords.push_back({xy[0], xy[1]});
  }
  if (p.coords.size() != p.graph.vertex_count()) throw InputError("coords must list every vertex");
  if (j.contains("keys")) {
    for (const Json& k : j["keys"]) {
      const auto s = as<std::array<int, 3>>(k, "key");
      p.keys.push_back({s[0], s[1], s[2]});
    }
    if (p.keys.size() != p.graph.vertex_count()) throw InputError("keys must list every vertex");
  }
  if (j.contains("annotations")) p.annotations = annotations_from_json(j["annotations"]);
  return p;
}

LabeledGraph labels_from_json(const Json& j, const LabeledGraph& topology) {
  if (j.is_object() && j.contains("labels")) {
    std::vector<EdgeLabel> labels;
    for (const Json& l : j["labels"]) labels.push_back(label_from_string(as<std::string>(l, "label")));
    if (labels.size() != topology.edge_count())
      throw InputError("expected " + std::to_string(topology.edge_count()) + " labels, got " +
                       std::to_string(labels.size()));
    return topology.relabeled(labels);
  }
  LabeledGraph g = graph_from_json(j);
  require_same_topology(topology, g);
  return g;
}

Json scheme_to_json(const ColoringScheme& s) {
  return {{"colors", s.coloring.colors}, {"t", s.t}, {"r", s.r}, {"algorithm", s.algorithm}};
}

Json solve_result_to_json(const SolveResult& r) {
  Json out{{"status", to_string(r.status)}, {"nodes", r.nodes}};
  out["t"] = r.t ? Json(*r.t) : Json(nullptr);
  out["colors"] = r.witness ? Json(r.witness->colors) : Json(nullptr);
  return out;
}

Json min_colors_to_json(const MinColorsResult& r) {
  Json out{{"status", to_string(r.status)}, {"nodes", r.nodes}};
  const bool sat = r.status == SolveStatus::kSat;
  out["r"] = sat ? Json(r.r) : Json(nullptr);
  out["t"] = sat ? Json(r.t) : Json(nullptr);
  out["colors"] = r.witness ? Json(r.witness->colors) : Json(nullptr);
  return out;
}

Json read_json_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace happy
