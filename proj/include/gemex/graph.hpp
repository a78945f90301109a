#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "gemex/errors.hpp"

namespace gemex {

inline constexpr int kMaxVertices = 64;

// Simple undirected graph on at most 64 vertices. Neighbor sets are one
// 64-bit word each; vertices are 0..n-1. Values are immutable: every edit
// returns a new graph, so graphs can be shared freely across workers.
class Graph {
 public:
  explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<std::size_t>(n), 0) {}

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }
  // Trusted fast path: `adj` must already be symmetric and irreflexive.
  static Graph from_adjacency_unchecked(std::vector<std::uint64_t> adj);

  int vertex_count() const { return n_; }
  int edge_count() const;
  std::uint64_t vertex_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }

  bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
  std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }
  int min_degree() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  // New graph with `extra` additional isolated vertices appended.
  Graph with_isolated(int extra) const;
  // Keep exactly the vertices in `mask`, compacted in increasing index order.
  Graph induced(std::uint64_t mask) const;
  // Relabel: vertex v becomes `labeling[v]`; `labeling` must be a permutation of 0..n-1.
  Graph relabeled(std::span<const int> labeling) const;
  // Append one vertex adjacent to the vertices in `mask`.
  Graph augmented(std::uint64_t mask) const;

  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  static int check_order(int n) {
    if (n < 1 || n > kMaxVertices) throw CapacityError("vertex count must be in 1..64");
    return n;
  }

  int n_;
  std::vector<std::uint64_t> adj_;
};

// Iterate the set bits of `mask` as vertex indices.
template <typename Fn>
inline void for_each_vertex(std::uint64_t mask, Fn&& fn) {
  while (mask) {
    fn(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

// ---- named constructions ----

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);  // K_{1,n-1}, center 0
// Complete split graph S_{n,k}: K_k on vertices 0..k-1 joined to n-k isolated vertices.
Graph complete_split(int n, int k);
// S_{n,2} with the t edges {1, n-1-i}, i = 0..t-1, removed.
Graph complete_split_minus(int n, int t);
// Fan H_t = K_1 v P_{t-1}: apex 0, path 1..t-1. Requires t >= 2.
Graph fan_graph(int t);
inline Graph gem_graph() { return fan_graph(5); }

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

struct FamilyParams {
  enum class Tag {
    CompleteSplit,       // a = n, b = k
    CompleteSplitMinus,  // a = n, b = t
    Fan,                 // a = t
    Path,                // a = n
    Cycle,               // a = n
    Complete,            // a = n
    Star,                // a = n
    Union,               // left, right
    Join,                // left, right
  };

  Tag tag;
  int a = 0;
  int b = 0;
  std::shared_ptr<FamilyParams> left;
  std::shared_ptr<FamilyParams> right;

  static FamilyParams complete_split(int n, int k) { return {Tag::CompleteSplit, n, k, nullptr, nullptr}; }
  static FamilyParams complete_split_minus(int n, int t) {
    return {Tag::CompleteSplitMinus, n, t, nullptr, nullptr};
  }
  static FamilyParams fan(int t) { return {Tag::Fan, t, 0, nullptr, nullptr}; }
  static FamilyParams path(int n) { return {Tag::Path, n, 0, nullptr, nullptr}; }
  static FamilyParams cycle(int n) { return {Tag::Cycle, n, 0, nullptr, nullptr}; }
  static FamilyParams complete(int n) { return {Tag::Complete, n, 0, nullptr, nullptr}; }
  static FamilyParams star(int n) { return {Tag::Star, n, 0, nullptr, nullptr}; }
  static FamilyParams union_of(FamilyParams l, FamilyParams r) {
    return {Tag::Union, 0, 0, std::make_shared<FamilyParams>(std::move(l)),
            std::make_shared<FamilyParams>(std::move(r))};
  }
  static FamilyParams join_of(FamilyParams l, FamilyParams r) {
    return {Tag::Join, 0, 0, std::make_shared<FamilyParams>(std::move(l)),
            std::make_shared<FamilyParams>(std::move(r))};
  }
};

Graph build_family(const FamilyParams& params);

// ---- structure queries ----

// Connected components as vertex masks, ordered by least contained vertex.
std::vector<std::uint64_t> components(const Graph& g);
// Components of the subgraph induced on `mask`, same ordering.
std::vector<std::uint64_t> components_within(const Graph& g, std::uint64_t mask);
bool is_connected(const Graph& g);
bool is_isolated_free(const Graph& g);

}  // namespace gemex
