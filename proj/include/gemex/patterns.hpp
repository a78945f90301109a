#pragma once

#include "gemex/graph.hpp"

namespace gemex {

// Forbidden pattern for subgraph containment tests. Fans get a dedicated
// detector (apex plus a path in its neighborhood); anything else runs through
// generic embedding. The gem is the 5-vertex fan.
class PatternSpec {
 public:
  static PatternSpec gem() { return fan(5); }
  static PatternSpec fan(int t) { return PatternSpec(t, fan_graph(t)); }
  static PatternSpec exact(Graph g) { return PatternSpec(0, std::move(g)); }

  bool is_fan() const { return fan_order_ != 0; }
  int fan_order() const { return fan_order_; }
  const Graph& pattern() const { return pattern_; }

 private:
  PatternSpec(int fan_order, Graph pattern)
      : fan_order_(fan_order), pattern_(std::move(pattern)) {}

  int fan_order_;
  Graph pattern_;
};

// True iff some injective vertex map sends every pattern edge onto an edge of
// g. Ordinary subgraph containment, not induced.
bool contains_subgraph(const Graph& g, const PatternSpec& p);

bool is_gem_free(const Graph& g);

// Independent check: exhaustive search over injective maps, no shortcuts.
// Pattern capped at 8 vertices and g at 16.
bool oracle_contains(const Graph& g, const PatternSpec& p);

namespace detail {

// Is there a simple path on `len` vertices using only vertices of `mask`?
bool has_path_in_mask(const Graph& g, std::uint64_t mask, int len);

// g already carries edge {p,q} and is known to be gem-free without it; tells
// whether that edge completes a gem. Only apexes adjacent to both ends (or p,
// q themselves) can host one, so the scan stays local.
bool edge_completes_gem(const Graph& g, int p, int q);

}  // namespace detail

}  // namespace gemex
