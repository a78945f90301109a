#pragma once

#include <span>
#include <string>
#include <vector>

#include "gemex/graph.hpp"

namespace gemex {

// Canonical labeling result. `labeling[v]` is the position of v in the
// canonical order (feed it to Graph::relabeled to get the canonical copy),
// `orbit[v]` is the least vertex whose automorphism orbit contains v, and
// `generators` are the automorphisms discovered during the search; together
// they generate the full automorphism group, and the orbit array is exact.
// `key` is the graph6 string of the canonical copy: two graphs have equal
// keys exactly when they are isomorphic.
struct CanonicalAnalysis {
  std::vector<int> labeling;
  std::vector<int> orbit;
  std::vector<std::vector<int>> generators;
  std::string key;
};

CanonicalAnalysis analyze(const Graph& g);

// Color-constrained variant: positions are grouped by color (smaller color
// first) and only color-preserving automorphisms count. Keys are comparable
// only between graphs carrying the same color multiset. `colors` needs one
// entry per vertex.
CanonicalAnalysis analyze(const Graph& g, std::span<const int> colors);

// graph6 of the canonical copy, the dedup key used throughout.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

namespace detail {

// The two engines behind analyze(): exhaustive permutation search (meant for
// small orders; analyze() uses it up to 8 vertices) and partition refinement
// with individualization (used above). Exposed so tests can cross-check one
// against the other on the same graph.
CanonicalAnalysis analyze_brute(const Graph& g, std::span<const int> colors = {});
CanonicalAnalysis analyze_refined(const Graph& g, std::span<const int> colors = {});

}  // namespace detail

}  // namespace gemex
