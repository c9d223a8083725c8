#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "happy/graph.h"
#include "happy/io.h"
#include "happy/lattice.h"

namespace happy {

/// Everything a puzzle is regenerated from.
struct PuzzleRequest {
  LatticeName lattice = LatticeName::k6_3;
  int rows = 3;
  int cols = 3;
  double far_prob = 0.35;
  std::uint64_t seed = 0;
  int givens = 0;  // number of witness values revealed up front
};

struct Puzzle {
  PuzzleRequest request;
  LatticePatch patch;    // topology, coords, annotations
  LabeledGraph graph;    // patch topology with the puzzle's labels
  std::int64_t t = 1;
  std::int64_t r = 1;    // palette {0..r-1}
  std::map<VertexId, Color> givens;
  Coloring witness;      // never sent to players by default
  std::string source;    // "forest", "patch", "linear" or "solver"
  int attempts = 1;      // labelings drawn before one was accepted
};

/// Generation gave up: no sampled labeling was solvable within bounds.
class GenerationError : public std::runtime_error {
 public:
  GenerationError(const std::string& what, int attempts) : std::runtime_error(what), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

struct GenerationLimits {
  int max_attempts = 64;
  std::size_t max_solver_vertices = 40;
  std::int64_t max_solver_colors = 8;
  std::uint64_t solver_budget = 2'000'000;  // per attempt
};

/// True for the six lattices with a constructive colorer.
bool has_constructive_colorer(LatticeName name);

Puzzle generate_puzzle(const PuzzleRequest& req, const GenerationLimits& limits = {});

/// Stateless id: the request, encoded. parse_puzzle_id inverts it.
std::string puzzle_id(const PuzzleRequest& req);
PuzzleRequest parse_puzzle_id(const std::string& id);

using Assignment = std::map<VertexId, Color>;

enum class EdgeStatus { kHappy, kUnhappy, kUndetermined };
std::string to_string(EdgeStatus s);

struct CheckResult {
  std::vector<EdgeStatus> edges;  // canonical edge order
  bool solved = false;
};

/// Witness-independent: any total assignment passing verify_coloring at p.t
/// is solved. Values outside the palette throw InputError.
CheckResult check_state(const Puzzle& p, const Assignment& s);

struct Hint {
  enum class Kind { kMove, kInconsistent, kComplete, kUnknown };
  Kind kind = Kind::kUnknown;
  VertexId vertex = 0;
  Color color = 0;
};

/// Lowest unassigned vertex with a value from some extension of the state,
/// preferring the witness.
Hint hint(const Puzzle& p, const Assignment& s, std::uint64_t budget = 5'000'000);

/// Public puzzle JSON; the witness only when asked for.
Json puzzle_to_json(const Puzzle& p, bool include_witness = false);
/// Accepts {"puzzle_id": ...}, a request object, or an inline puzzle
/// (graph + t + r [+ givens]; no witness then).
Puzzle puzzle_from_json(const Json& j);
PuzzleRequest request_from_json(const Json& j);
Assignment assignment_from_json(const Json& j);

}  // namespace happy
