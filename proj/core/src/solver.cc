#include "happy/solver.h"

#include <algorithm>
#include <array>
#include <bit>
#include <set>

namespace happy {
namespace {

// Bitset over colors {0..kMaxColors-1}.
class Domain {
 public:
  static Domain range(std::int64_t lo, std::int64_t hi) {
    Domain d;
    lo = std::max<std::int64_t>(lo, 0);
    hi = std::min<std::int64_t>(hi, kMaxColors - 1);
    for (std::int64_t x = lo; x <= hi; ++x) d.words_[x >> 6] |= std::uint64_t{1} << (x & 63);
    return d;
  }

  bool contains(std::int64_t x) const {
    return x >= 0 && x < kMaxColors && ((words_[x >> 6] >> (x & 63)) & 1);
  }
  int count() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }
  bool empty() const { return count() == 0; }
  Domain& operator&=(const Domain& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Domain& remove(const Domain& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (int i = 0; i < kWords; ++i) {
      for (std::uint64_t w = words_[i]; w; w &= w - 1) {
        if (!f(std::int64_t{i * 64 + std::countr_zero(w)})) return;
      }
    }
  }

 private:
  static constexpr int kWords = kMaxColors / 64;
  std::array<std::uint64_t, kWords> words_{};
};

struct BudgetExceeded {};

// Backtracking with forward checking for one connected component and one t.
class ComponentSearch {
 public:
  ComponentSearch(const LabeledGraph& g, std::span<const VertexId> vertices, std::int64_t r,
                  std::int64_t t, const SolveOptions& opts,
                  const std::vector<std::vector<const OrderRule*>>* rules, std::uint64_t& nodes)
      : g_(g), vertices_(vertices), r_(r), t_(t), opts_(opts), rules_(rules), nodes_(nodes) {}

  // Colors of the component's vertices on success.
  std::optional<std::vector<Color>> run() {
    const std::size_t n = g_.vertex_count();
    color_.assign(n, kUnassigned);
    std::vector<Domain> dom(n);
    bool pinned = false;
    for (VertexId v : vertices_) {
      dom[v] = Domain::range(0, r_ - 1);
      if (auto it = opts_.pins.find(v); it != opts_.pins.end()) {
        dom[v] &= Domain::range(it->second, it->second);
        pinned = true;
      }
      if (dom[v].empty()) return std::nullopt;
    }
    symmetric_ = opts_.symmetry_breaking && !pinned;
    remaining_ = vertices_.size();
    if (!search(dom, true)) return std::nullopt;
    std::vector<Color> out;
    for (VertexId v : vertices_) out.push_back(color_[v]);
    return out;
  }

 private:
  static constexpr Color kUnassigned = -1;

  VertexId select(const std::vector<Domain>& dom) const {
    VertexId best = kNoVertex;
    std::tuple<int, int, int> best_key{};
    for (VertexId v : vertices_) {
      if (color_[v] != kUnassigned) continue;
      bool touches = false;
      for (const Incidence& nb : g_.neighbors(v)) touches |= color_[nb.neighbor] != kUnassigned;
      // Prefer vertices next to the colored set, then small domains, then high degree.
      const std::tuple<int, int, int> key{touches ? 0 : 1, dom[v].count(),
                                          -static_cast<int>(g_.degree(v))};
      if (best == kNoVertex || key < best_key) {
        best = v;
        best_key = key;
      }
    }
    return best;
  }

  bool prune_neighbors(VertexId v, Color x, std::vector<Domain>& dom) const {
    const Domain band = Domain::range(x - t_, x + t_);
    for (const Incidence& nb : g_.neighbors(v)) {
      const VertexId y = nb.neighbor;
      if (color_[y] != kUnassigned) continue;
      if (g_.edge(nb.edge).label == EdgeLabel::kNear) {
        dom[y] &= band;
      } else {
        dom[y].remove(band);
      }
      if (dom[y].empty()) return false;
    }
    return true;
  }

  bool apply_order_rules(VertexId v, std::vector<Domain>& dom) const {
    for (const OrderRule* rule : (*rules_)[v]) {
      const Color lo = color_[rule->premise.lo], hi = color_[rule->premise.hi];
      if (lo == kUnassigned || hi == kUnassigned || !(lo < hi)) continue;
      for (const OrderFact& f : rule->conclusions) {
        const Color a = color_[f.lo], b = color_[f.hi];
        if (a != kUnassigned && b != kUnassigned) {
          if (!(a < b)) return false;
        } else if (a != kUnassigned) {
          dom[f.hi] &= Domain::range(a + 1, r_ - 1);
          if (dom[f.hi].empty()) return false;
        } else if (b != kUnassigned) {
          dom[f.lo] &= Domain::range(0, b - 1);
          if (dom[f.lo].empty()) return false;
        }
      }
    }
    return true;
  }

  bool search(const std::vector<Domain>& dom, bool first) {
    if (remaining_ == 0) return true;
    const VertexId v = select(dom);
    Domain values = dom[v];
    if (first && symmetric_) values &= Domain::range(0, (r_ - 1) / 2);

    std::vector<Color> order;
    if (v < opts_.preferred.size() && values.contains(opts_.preferred[v]))
      order.push_back(opts_.preferred[v]);
    values.for_each([&](std::int64_t x) {
      if (order.empty() || order.front() != x) order.push_back(x);
      return true;
    });

    for (Color x : order) {
      if (++nodes_ > opts_.budget) throw BudgetExceeded{};
      color_[v] = x;
      --remaining_;
      std::vector<Domain> next = dom;
      next[v] = Domain::range(x, x);
      bool ok = prune_neighbors(v, x, next);
      if (ok && rules_) ok = apply_order_rules(v, next);
      if (ok && search(next, false)) return true;
      ++remaining_;
      color_[v] = kUnassigned;
    }
    return false;
  }

  const LabeledGraph& g_;
  std::span<const VertexId> vertices_;
  std::int64_t r_, t_;
  const SolveOptions& opts_;
  const std::vector<std::vector<const OrderRule*>>* rules_;
  std::uint64_t& nodes_;
  std::vector<Color> color_;
  std::size_t remaining_ = 0;
  bool symmetric_ = false;
};

std::vector<std::vector<VertexId>> components(const LabeledGraph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (const Incidence& nb : g.neighbors(comp[i])) {
        if (!seen[nb.neighbor]) {
          seen[nb.neighbor] = 1;
          comp.push_back(nb.neighbor);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool has_far(const LabeledGraph& g) {
  return std::any_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return e.label == EdgeLabel::kFar; });
}

}  // namespace

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSat: return "SAT";
    case SolveStatus::kUnsat: return "UNSAT";
    case SolveStatus::kBudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

SolveResult decide(const LabeledGraph& g, const SolveQuery& q) {
  if (q.r < 1 || q.r > kMaxColors)
    throw InputError("r must lie in 1.." + std::to_string(kMaxColors));
  if (q.t && *q.t < 0) throw InputError("threshold must be non-negative");
  for (const auto& [v, c] : q.options.pins) {
    if (v >= g.vertex_count()) throw InputError("pinned vertex out of range");
    if (c < 0 || c >= q.r) throw InputError("pinned color outside {0..r-1}");
  }

  std::vector<std::int64_t> ts;
  if (q.t) {
    ts.push_back(*q.t);
  } else if (!has_far(g)) {
    ts.push_back(0);
  } else {
    for (std::int64_t t = 0; t + 1 < q.r; ++t) ts.push_back(t);
  }

  std::vector<OrderRule> rules;
  std::vector<std::vector<const OrderRule*>> by_vertex;
  if (q.options.order_pruning) {
    rules = order_rules(g);
    by_vertex.resize(g.vertex_count());
    for (const OrderRule& rule : rules) {
      by_vertex[rule.premise.lo].push_back(&rule);
      by_vertex[rule.premise.hi].push_back(&rule);
    }
  }

  const auto comps = components(g);
  SolveResult result;
  bool exhausted_budget = false;
  for (std::int64_t t : ts) {
    std::vector<Color> colors(g.vertex_count(), 0);
    bool sat = true;
    try {
      for (const auto& comp : comps) {
        ComponentSearch search(g, comp, q.r, t, q.options,
                               q.options.order_pruning ? &by_vertex : nullptr, result.nodes);
        auto found = search.run();
        if (!found) {
          sat = false;
          break;
        }
        for (std::size_t i = 0; i < comp.size(); ++i) colors[comp[i]] = (*found)[i];
      }
    } catch (const BudgetExceeded&) {
      exhausted_budget = true;
      break;
    }
    if (sat) {
      Coloring c{std::move(colors)};
      if (!verify_coloring(g, c, t).valid) throw InternalError("solver witness failed to verify");
      result.status = SolveStatus::kSat;
      result.t = t;
      result.witness = std::move(c);
      return result;
    }
  }
  result.status = exhausted_budget ? SolveStatus::kBudgetExceeded : SolveStatus::kUnsat;
  return result;
}

MinColorsResult min_colors(const LabeledGraph& g, std::int64_t r_max, std::optional<std::int64_t> t,
                           SolveOptions options) {
  if (r_max < 1) throw InputError("r_max must be at least 1");
  MinColorsResult out;
  for (std::int64_t r = 1; r <= r_max; ++r) {
    SolveQuery q{r, t, options};
    q.options.budget = options.budget > out.nodes ? options.budget - out.nodes : 0;
    const SolveResult res = decide(g, q);
    out.nodes += res.nodes;
    if (res.status == SolveStatus::kBudgetExceeded) {
      out.status = SolveStatus::kBudgetExceeded;
      return out;
    }
    if (res.status == SolveStatus::kSat) {
      out.status = SolveStatus::kSat;
      out.r = r;
      out.t = *res.t;
      out.witness = res.witness;
      return out;
    }
  }
  return out;
}

LabelingCheck check_all_labelings(const LabeledGraph& g, std::int64_t r, std::int64_t t,
                                  std::size_t max_edges, SolveOptions options) {
  const std::size_t m = g.edge_count();
  if (m > max_edges)
    throw InputError("graph has " + std::to_string(m) + " edges; labeling enumeration is limited to " +
                     std::to_string(max_edges));
  LabelingCheck out;
  std::vector<EdgeLabel> labels(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (std::size_t i = 0; i < m; ++i) labels[i] = (mask >> i) & 1 ? EdgeLabel::kFar : EdgeLabel::kNear;
    const SolveResult res = decide(g.relabeled(labels), {r, t, options});
    if (res.status == SolveStatus::kBudgetExceeded) {
      out.budget_exceeded = true;
      out.all_colorable = false;
      return out;
    }
    if (res.status == SolveStatus::kUnsat) {
      out.all_colorable = false;
      out.counterexample = labels;
      return out;
    }
  }
  return out;
}

std::vector<OrderRule> order_rules(const LabeledGraph& g) {
  std::set<std::pair<OrderFact, std::vector<OrderFact>>> found;
  auto add = [&](OrderFact p, std::vector<OrderFact> c) {
    std::sort(c.begin(), c.end());
    found.insert({p, std::move(c)});
  };
  auto lab = [&](VertexId a, VertexId b) { return g.label(a, b); };
  constexpr EdgeLabel N = EdgeLabel::kNear, F = EdgeLabel::kFar;

  for (VertexId v1 = 0; v1 < g.vertex_count(); ++v1) {
    for (const Incidence& x : g.neighbors(v1)) {
      for (const Incidence& y : g.neighbors(v1)) {
        const VertexId v0 = x.neighbor, v2 = y.neighbor;
        if (v0 == v2 || !g.find_edge(v0, v2)) continue;
        const EdgeLabel l01 = lab(v0, v1), l12 = lab(v1, v2), l02 = lab(v0, v2);
        if (l02 == F && l01 == N && l12 == N) {
          add({v0, v1}, {{v1, v2}});
          add({v1, v0}, {{v2, v1}});
        }
        if (l02 == N && l01 == F && l12 == F) {
          add({v0, v1}, {{v2, v1}});
          add({v1, v0}, {{v1, v2}});
        }
      }
    }
  }

  for (VertexId u0 = 0; u0 < g.vertex_count(); ++u0) {
    for (const Incidence& a : g.neighbors(u0)) {
      const VertexId u1 = a.neighbor;
      for (const Incidence& b : g.neighbors(u1)) {
        const VertexId u2 = b.neighbor;
        if (u2 == u0) continue;
        for (const Incidence& c : g.neighbors(u2)) {
          const VertexId u3 = c.neighbor;
          if (u3 == u1 || u3 == u0 || !g.find_edge(u3, u0)) continue;
          const EdgeLabel l01 = lab(u0, u1), l12 = lab(u1, u2), l23 = lab(u2, u3), l30 = lab(u3, u0);
          if (l30 == F && l23 == F && l01 == N && l12 == N) {
            add({u0, u3}, {{u1, u3}, {u2, u3}});
            add({u3, u0}, {{u3, u1}, {u3, u2}});
          }
          if (l01 == F && l23 == F && l30 == N && l12 == N) {
            add({u0, u1}, {{u0, u2}, {u3, u1}, {u3, u2}});
            add({u1, u0}, {{u2, u0}, {u1, u3}, {u2, u3}});
          }
        }
      }
    }
  }

  std::vector<OrderRule> out;
  for (const auto& [p, c] : found) out.push_back({p, c});
  return out;
}

OrderClosure propagate_order_constraints(const LabeledGraph& g, std::span<const OrderFact> facts) {
  const std::size_t n = g.vertex_count();
  for (const OrderFact& f : facts) {
    if (f.lo >= n || f.hi >= n) throw InputError("order fact refers to a missing vertex");
  }
  const auto rules = order_rules(g);
  std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
  for (const OrderFact& f : facts) less[f.lo][f.hi] = 1;

  OrderClosure out;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!less[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (less[k][j] && !less[i][j]) less[i][j] = 1;
        }
      }
    }
    for (const OrderRule& rule : rules) {
      if (!less[rule.premise.lo][rule.premise.hi]) continue;
      for (const OrderFact& f : rule.conclusions) {
        if (!less[f.lo][f.hi]) {
          less[f.lo][f.hi] = 1;
          changed = true;
        }
      }
    }
  }
  for (VertexId i = 0; i < n; ++i) {
    if (less[i][i]) out.contradiction = true;
    for (VertexId j = 0; j < n; ++j) {
      if (less[i][j]) out.facts.push_back({i, j});
    }
  }
  return out;
}

}  // namespace happy
