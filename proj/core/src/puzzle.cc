#include "happy/puzzle.h"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include "happy/colorers.h"
#include "happy/solver.h"

namespace happy {
namespace {

constexpr int kMaxSide = 40;

// Portable draws: the engine's output sequence is fixed by the standard,
// the distributions are not.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

void validate(const PuzzleRequest& req) {
  if (req.rows < 1 || req.cols < 1 || req.rows > kMaxSide || req.cols > kMaxSide)
    throw InputError("rows and cols must lie in 1.." + std::to_string(kMaxSide));
  if (!(req.far_prob >= 0.0 && req.far_prob <= 1.0)) throw InputError("far_prob must lie in [0, 1]");
  if (req.givens < 0) throw InputError("givens must be non-negative");
}

Coloring shift_to_zero(const Coloring& c) {
  if (c.colors.empty()) return c;
  return normalize(c);
}

template <typename T>
T field_or(const Json& j, const char* key, T fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  try {
    return j[key].get<T>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

bool has_constructive_colorer(LatticeName name) { return !constructive_algorithm(name).empty(); }

Puzzle generate_puzzle(const PuzzleRequest& req, const GenerationLimits& limits) {
  validate(req);
  Puzzle p;
  p.request = req;
  p.patch = generate(req.lattice, {req.rows, req.cols});
  const LabeledGraph& topo = p.patch.graph;
  const bool constructive = has_constructive_colorer(req.lattice);
  if (!constructive && topo.vertex_count() > limits.max_solver_vertices)
    throw InputError(to_string(req.lattice) + " puzzles are solver-backed and limited to " +
                     std::to_string(limits.max_solver_vertices) + " vertices; this patch has " +
                     std::to_string(topo.vertex_count()));

  std::mt19937_64 rng(req.seed);
  std::vector<EdgeLabel> labels(topo.edge_count());
  bool done = false;
  for (p.attempts = 1; p.attempts <= limits.max_attempts; ++p.attempts) {
    for (EdgeLabel& l : labels) l = unit(rng) < req.far_prob ? EdgeLabel::kFar : EdgeLabel::kNear;
    p.graph = topo.relabeled(labels);
    if (constructive) {
      const ColoringScheme s = color_constructively(p.patch, p.graph);
      p.t = s.t;
      p.r = s.r;
      p.witness = shift_to_zero(s.coloring);
      p.source = s.algorithm;
      done = true;
      break;
    }
    SolveOptions opts;
    opts.budget = limits.solver_budget;
    const MinColorsResult m = min_colors(p.graph, limits.max_solver_colors, 1, opts);
    if (m.status == SolveStatus::kSat) {
      p.t = m.t;
      p.r = m.r;
      p.witness = shift_to_zero(*m.witness);
      p.source = "solver";
      done = true;
      break;
    }
  }
  if (!done) {
    --p.attempts;
    throw GenerationError("no solvable labeling found after " + std::to_string(p.attempts) + " attempts",
                          p.attempts);
  }
  if (!verify_coloring(p.graph, p.witness, p.t).valid || range_of(p.witness) > p.r)
    throw InternalError("puzzle witness failed to verify");

  // Reveal a seeded selection of witness values.
  const std::size_t n = topo.vertex_count();
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::mt19937_64 pick(req.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[below(pick, i)]);
  const std::size_t shown = std::min<std::size_t>(static_cast<std::size_t>(req.givens), n);
  for (std::size_t i = 0; i < shown; ++i) p.givens[order[i]] = p.witness[order[i]];
  return p;
}

std::string puzzle_id(const PuzzleRequest& req) {
  char prob[32];
  const auto res = std::to_chars(prob, prob + sizeof prob, req.far_prob);  // shortest round-trip form
  *res.ptr = '\0';
  std::ostringstream out;
  out << "v1:" << to_string(req.lattice) << ':' << req.rows << ':' << req.cols << ':' << prob << ':' << req.seed
      << ':' << req.givens;
  return out.str();
}

PuzzleRequest parse_puzzle_id(const std::string& id) {
  std::vector<std::string> parts;
  std::stringstream in(id);
  for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
  if (parts.size() != 7 || parts[0] != "v1") throw InputError("malformed puzzle_id '" + id + "'");
  auto integer = [&](const std::string& s, auto& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError("malformed puzzle_id '" + id + "'");
  };
  PuzzleRequest req;
  req.lattice = parse_lattice(parts[1]);
  integer(parts[2], req.rows);
  integer(parts[3], req.cols);
  char* end = nullptr;
  req.far_prob = std::strtod(parts[4].c_str(), &end);
  if (end != parts[4].c_str() + parts[4].size()) throw InputError("malformed puzzle_id '" + id + "'");
  integer(parts[5], req.seed);
  integer(parts[6], req.givens);
  validate(req);
  return req;
}

std::string to_string(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::kHappy: return "happy";
    case EdgeStatus::kUnhappy: return "unhappy";
    case EdgeStatus::kUndetermined: return "undetermined";
  }
  return "?";
}

namespace {

// Givens merged with the player's values; conflicting or out-of-palette
// values are input errors.
std::vector<std::optional<Color>> effective(const Puzzle& p, const Assignment& s) {
  const std::size_t n = p.graph.vertex_count();
  std::vector<std::optional<Color>> out(n);
  for (const auto& [v, c] : p.givens) out[v] = c;
  for (const auto& [v, c] : s) {
    if (v >= n) throw InputError("vertex " + std::to_string(v) + " is not on the board");
    if (c < 0 || c >= p.r)
      throw InputError("color " + std::to_string(c) + " is outside the palette 0.." + std::to_string(p.r - 1));
    if (out[v] && *out[v] != c) throw InputError("vertex " + std::to_string(v) + " is a given");
    out[v] = c;
  }
  return out;
}

}  // namespace

CheckResult check_state(const Puzzle& p, const Assignment& s) {
  const auto values = effective(p, s);
  CheckResult out;
  out.solved = true;
  for (const Edge& e : p.graph.edges()) {
    if (!values[e.u] || !values[e.v]) {
      out.edges.push_back(EdgeStatus::kUndetermined);
      out.solved = false;
      continue;
    }
    const Color d = *values[e.u] > *values[e.v] ? *values[e.u] - *values[e.v] : *values[e.v] - *values[e.u];
    const bool happy = (d <= p.t) == (e.label == EdgeLabel::kNear);
    out.edges.push_back(happy ? EdgeStatus::kHappy : EdgeStatus::kUnhappy);
    out.solved = out.solved && happy;
  }
  // Isolated unset vertices leave no undetermined edge behind.
  for (const auto& v : values) out.solved = out.solved && v.has_value();
  return out;
}

Hint hint(const Puzzle& p, const Assignment& s, std::uint64_t budget) {
  const auto values = effective(p, s);
  const CheckResult check = check_state(p, s);
  Hint out;
  if (check.solved) {
    out.kind = Hint::Kind::kComplete;
    return out;
  }
  if (std::find(check.edges.begin(), check.edges.end(), EdgeStatus::kUnhappy) != check.edges.end()) {
    out.kind = Hint::Kind::kInconsistent;
    return out;
  }
  const auto first_unset = std::find(values.begin(), values.end(), std::nullopt);
  const VertexId target = static_cast<VertexId>(first_unset - values.begin());

  // The witness extends the state when it agrees on every set vertex.
  const bool witness_ok = p.witness.size() == values.size() && [&] {
    for (VertexId v = 0; v < values.size(); ++v) {
      if (values[v] && *values[v] != p.witness[v]) return false;
    }
    return true;
  }();
  if (witness_ok) {
    out.kind = Hint::Kind::kMove;
    out.vertex = target;
    out.color = p.witness[target];
    return out;
  }

  SolveOptions opts;
  opts.budget = budget;
  opts.symmetry_breaking = false;
  for (VertexId v = 0; v < values.size(); ++v) {
    if (values[v]) opts.pins[v] = *values[v];
  }
  if (p.witness.size() == values.size()) opts.preferred = p.witness.colors;
  const SolveResult res = decide(p.graph, {p.r, p.t, opts});
  if (res.status == SolveStatus::kBudgetExceeded) return out;
  if (res.status == SolveStatus::kUnsat) {
    out.kind = Hint::Kind::kInconsistent;
    return out;
  }
  out.kind = Hint::Kind::kMove;
  out.vertex = target;
  out.color = (*res.witness)[target];
  return out;
}

Json puzzle_to_json(const Puzzle& p, bool include_witness) {
  Json givens = Json::object();
  for (const auto& [v, c] : p.givens) givens[std::to_string(v)] = c;
  Json coords = Json::array();
  for (const Vec2& c : p.patch.coords) coords.push_back({c.x, c.y});
  Json palette = Json::array();
  for (std::int64_t c = 0; c < p.r; ++c) palette.push_back(c);
  Json out{{"puzzle_id", puzzle_id(p.request)},
           {"lattice", to_string(p.request.lattice)},
           {"rows", p.request.rows},
           {"cols", p.request.cols},
           {"far_prob", p.request.far_prob},
           {"seed", p.request.seed},
           {"graph", graph_to_json(p.graph)},
           {"coords", std::move(coords)},
           {"t", p.t},
           {"r", p.r},
           {"palette", std::move(palette)},
           {"givens", std::move(givens)},
           {"source", p.source},
           {"attempts", p.attempts}};
  if (include_witness) out["witness"] = p.witness.colors;
  return out;
}

PuzzleRequest request_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  if (j.contains("puzzle_id")) return parse_puzzle_id(field_or<std::string>(j, "puzzle_id", ""));
  PuzzleRequest req;
  req.lattice = parse_lattice(field_or<std::string>(j, "lattice", "6^3"));
  req.rows = field_or(j, "rows", req.rows);
  req.cols = field_or(j, "cols", req.cols);
  req.far_prob = field_or(j, "far_prob", req.far_prob);
  req.seed = field_or(j, "seed", req.seed);
  req.givens = field_or(j, "givens", req.givens);
  validate(req);
  return req;
}

Puzzle puzzle_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  if (j.contains("puzzle_id") || !j.contains("graph")) return generate_puzzle(request_from_json(j));
  // Inline puzzle: trust the board, not any witness.
  Puzzle p;
  p.graph = graph_from_json(j["graph"]);
  p.t = field_or<std::int64_t>(j, "t", 1);
  p.r = field_or<std::int64_t>(j, "r", 0);
  if (p.t < 0 || p.r < 1) throw InputError("inline puzzle needs t >= 0 and r >= 1");
  p.patch.graph = p.graph;
  p.source = "inline";
  if (j.contains("givens")) {
    const Assignment g = assignment_from_json(j["givens"]);
    for (const auto& [v, c] : g) {
      if (v >= p.graph.vertex_count() || c < 0 || c >= p.r) throw InputError("given outside the board or palette");
    }
    p.givens = g;
  }
  return p;
}

Assignment assignment_from_json(const Json& j) {
  Assignment out;
  auto put = [&](const Json& vj, const Json& cj) {
    if (cj.is_null()) return;
    try {
      out[vj.get<VertexId>()] = cj.get<Color>();
    } catch (const Json::exception& e) {
      throw InputError(std::string("assignment: ") + e.what());
    }
  };
  if (j.is_null()) return out;
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      VertexId v = 0;
      const std::string& k = it.key();
      auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), v);
      if (ec != std::errc() || ptr != k.data() + k.size()) throw InputError("assignment key '" + k + "' is not a vertex id");
      put(Json(v), it.value());
    }
    return out;
  }
  if (j.is_array()) {
    for (const Json& e : j) {
      if (!e.is_array() || e.size() != 2) throw InputError("assignment entries must be [vertex, color]");
      put(e[0], e[1]);
    }
    return out;
  }
  throw InputError("assignment must be an object or a list of [vertex, color]");
}

}  // namespace happy
