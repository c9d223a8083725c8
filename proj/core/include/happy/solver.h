#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "happy/graph.h"

namespace happy {

enum class SolveStatus { kSat, kUnsat, kBudgetExceeded };
std::string to_string(SolveStatus s);

struct SolveOptions {
  std::uint64_t budget = 100'000'000;  // search nodes, summed over all t
  bool order_pruning = false;          // triangle/4-cycle order rules
  bool symmetry_breaking = true;       // reflection on components without pins
  std::map<VertexId, Color> pins;      // fixed colors in {0..r-1}
  std::vector<Color> preferred;        // per-vertex value tried first (optional)
};

/// Palette {0..r-1}; t absent means every t in 0..r-1.
struct SolveQuery {
  std::int64_t r = 1;
  std::optional<std::int64_t> t;
  SolveOptions options;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kUnsat;
  std::optional<std::int64_t> t;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
};

/// Largest palette the search supports.
inline constexpr std::int64_t kMaxColors = 256;

SolveResult decide(const LabeledGraph& g, const SolveQuery& q);

struct MinColorsResult {
  SolveStatus status = SolveStatus::kUnsat;  // kUnsat: none up to r_max
  std::int64_t r = 0;
  std::int64_t t = 0;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
};

/// Smallest r (then smallest t) admitting a coloring, searching r = 1..r_max.
MinColorsResult min_colors(const LabeledGraph& g, std::int64_t r_max,
                           std::optional<std::int64_t> t = std::nullopt, SolveOptions options = {});

struct LabelingCheck {
  bool all_colorable = true;
  std::optional<std::vector<EdgeLabel>> counterexample;  // first failing labeling
  bool budget_exceeded = false;
};

/// Runs decide on all 2^|E| labelings. Refuses more than max_edges edges.
LabelingCheck check_all_labelings(const LabeledGraph& g, std::int64_t r, std::int64_t t,
                                  std::size_t max_edges = 20, SolveOptions options = {});

/// c(lo) < c(hi).
struct OrderFact {
  VertexId lo = 0;
  VertexId hi = 0;
  friend auto operator<=>(const OrderFact&, const OrderFact&) = default;
};

/// Implication c(premise.lo) < c(premise.hi) => every conclusion, valid for
/// every threshold-coloring of the graph.
struct OrderRule {
  OrderFact premise;
  std::vector<OrderFact> conclusions;
};

/// Instances of the triangle and 4-cycle order rules in g, both orientations.
std::vector<OrderRule> order_rules(const LabeledGraph& g);

struct OrderClosure {
  bool contradiction = false;
  std::vector<OrderFact> facts;  // sorted, transitively closed
};

OrderClosure propagate_order_constraints(const LabeledGraph& g, std::span<const OrderFact> facts);

}  // namespace happy
