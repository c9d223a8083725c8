#include "happy/service.h"

#include <httplib.h>

#include <iostream>

#include "happy/puzzle.h"
#include "happy/solver.h"

namespace happy {
namespace {

using L = LatticeName;

Json error_body(const std::string& message) { return {{"error", message}}; }

Json lattices_json() {
  Json out = Json::array();
  for (const LatticeStatus& s : lattice_statuses()) {
    Json e{{"name", to_string(s.name)}, {"status", s.status}};
    e["r"] = s.r ? Json(*s.r) : Json(nullptr);
    e["t"] = s.t ? Json(*s.t) : Json(nullptr);
    if (!s.note.empty()) e["note"] = s.note;
    out.push_back(std::move(e));
  }
  return out;
}

// The puzzle named by a request body: "puzzle" (object or id), "puzzle_id",
// or the request/inline fields at top level.
Puzzle referenced_puzzle(const Json& body) {
  if (body.contains("puzzle")) {
    const Json& p = body["puzzle"];
    return p.is_string() ? generate_puzzle(parse_puzzle_id(p.get<std::string>())) : puzzle_from_json(p);
  }
  return puzzle_from_json(body);
}

Json check_json(const Json& body) {
  const Puzzle p = referenced_puzzle(body);
  const CheckResult r = check_state(p, assignment_from_json(body.value("assignment", Json::object())));
  Json edges = Json::array();
  for (EdgeStatus s : r.edges) edges.push_back(to_string(s));
  return {{"edges", std::move(edges)}, {"solved", r.solved}};
}

Json hint_json(const Json& body) {
  const Puzzle p = referenced_puzzle(body);
  const Hint h = hint(p, assignment_from_json(body.value("assignment", Json::object())));
  switch (h.kind) {
    case Hint::Kind::kMove: return {{"vertex", h.vertex}, {"color", h.color}};
    case Hint::Kind::kInconsistent: return {{"status", "inconsistent"}};
    case Hint::Kind::kComplete: return {{"status", "complete"}};
    case Hint::Kind::kUnknown: break;
  }
  return {{"status", "unknown"}};
}

Json solve_json(const Json& body) {
  const Puzzle p = referenced_puzzle(body);
  if (p.witness.size() == p.graph.vertex_count()) {
    return {{"status", "SAT"}, {"t", p.t}, {"r", p.r}, {"colors", p.witness.colors}};
  }
  SolveOptions opts;
  for (const auto& [v, c] : p.givens) opts.pins[v] = c;
  opts.symmetry_breaking = false;
  opts.budget = 5'000'000;
  Json out = solve_result_to_json(decide(p.graph, {p.r, p.t, opts}));
  out["r"] = p.r;
  return out;
}

}  // namespace

std::vector<LatticeStatus> lattice_statuses() {
  const std::string linear = "(3m+2, m) with m the size of the unique-color set";
  return {
      {L::k6_3, "total-colorable", 5, 1, ""},
      {L::k4_8_2, "total-colorable", 5, 1, ""},
      {L::k3_12_2, "total-colorable", 9, 2, ""},
      {L::k4_6_12, "total-colorable", 9, 2, ""},
      {L::kD3_2_4_3_4, "total-colorable", std::nullopt, std::nullopt, linear},
      {L::kD3_4_6, "total-colorable", std::nullopt, std::nullopt, linear},
      {L::k3_6, "non-colorable", std::nullopt, std::nullopt, "gadget fig6a"},
      {L::k3_4_6, "non-colorable", std::nullopt, std::nullopt, "gadget fig6a"},
      {L::k3_3_4_2, "non-colorable", std::nullopt, std::nullopt, "gadget fig6b"},
      {L::k3_2_4_3_4, "non-colorable", std::nullopt, std::nullopt, "gadget fig6c"},
      {L::kD3_12_2, "non-colorable", std::nullopt, std::nullopt, "gadget fig6d"},
      {L::kD4_6_12, "non-colorable", std::nullopt, std::nullopt, "gadget fig6e"},
      {L::kD4_8_2, "non-colorable", std::nullopt, std::nullopt, "gadget fig6e"},
      {L::k4_4, "unbounded", std::nullopt, std::nullopt, "square spiral"},
      {L::kD3_4_6_4, "unbounded", std::nullopt, std::nullopt, "path spiral"},
      {L::kD3_6_3_6, "unbounded", std::nullopt, std::nullopt, "caterpillar spiral"},
      {L::k3_4_6_4, "open", std::nullopt, std::nullopt, ""},
      {L::k3_6_3_6, "open", std::nullopt, std::nullopt, ""},
      {L::kD3_3_4_2, "open", std::nullopt, std::nullopt, ""},
  };
}

ApiResponse handle_api(const std::string& method, const std::string& path, const std::string& body,
                       bool enable_solve) {
  try {
    if (path == "/api/lattices") {
      if (method != "GET") return {405, error_body("use GET")};
      return {200, lattices_json()};
    }
    const bool known = path == "/api/puzzle" || path == "/api/check" || path == "/api/hint" || path == "/api/solve";
    if (!known) return {404, error_body("no such endpoint: " + path)};
    if (method != "POST") return {405, error_body("use POST")};
    if (path == "/api/solve" && !enable_solve) return {403, error_body("/api/solve is disabled")};

    Json req = body.empty() ? Json::object() : Json::parse(body);
    if (!req.is_object()) return {400, error_body("request body must be a JSON object")};
    if (path == "/api/puzzle") return {200, puzzle_to_json(generate_puzzle(request_from_json(req)))};
    if (path == "/api/check") return {200, check_json(req)};
    if (path == "/api/hint") return {200, hint_json(req)};
    return {200, solve_json(req)};
  } catch (const Json::exception& e) {
    return {400, error_body(std::string("bad JSON: ") + e.what())};
  } catch (const InputError& e) {
    return {400, error_body(e.what())};
  } catch (const GenerationError& e) {
    Json b = error_body(e.what());
    b["attempts"] = e.attempts();
    return {422, std::move(b)};
  } catch (const std::exception& e) {
    return {500, error_body(e.what())};
  }
}

void serve(const ServiceOptions& options) {
  httplib::Server server;
  if (!options.static_dir.empty() && !server.set_mount_point("/", options.static_dir))
    throw std::runtime_error("static directory not found: " + options.static_dir);

  auto route = [&](const httplib::Request& req, httplib::Response& res) {
    const ApiResponse r = handle_api(req.method, req.path, req.body, options.enable_solve);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Get("/api/lattices", route);
  server.Post(R"(/api/.*)", route);

  if (!server.bind_to_port(options.host, options.port))
    throw std::runtime_error("cannot bind " + options.host + ":" + std::to_string(options.port));
  std::cerr << "listening on " << options.host << ':' << options.port << '\n';
  server.listen_after_bind();
}

}  // namespace happy
