#include "gemex/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace gemex {

namespace {

void check_vertex(const Graph& g, int v, const char* what) {
  if (v < 0 || v >= g.vertex_count())
    throw ParameterError(std::string(what) + " vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParameterError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                           "} out of range for n=" + std::to_string(n));
    if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)] |= 1ull << v;
    g.adj_[static_cast<std::size_t>(v)] |= 1ull << u;
  }
  return g;
}

Graph Graph::from_adjacency_unchecked(std::vector<std::uint64_t> adj) {
  Graph g(static_cast<int>(adj.size()));
  g.adj_ = std::move(adj);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

int Graph::min_degree() const {
  int d = kMaxVertices;
  for (std::uint64_t row : adj_) d = std::min(d, std::popcount(row));
  return d;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(*this, u, "edge");
  check_vertex(*this, v, "edge");
  if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.adj_[static_cast<std::size_t>(u)] |= 1ull << v;
  g.adj_[static_cast<std::size_t>(v)] |= 1ull << u;
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(*this, u, "edge");
  check_vertex(*this, v, "edge");
  Graph g = *this;
  g.adj_[static_cast<std::size_t>(u)] &= ~(1ull << v);
  g.adj_[static_cast<std::size_t>(v)] &= ~(1ull << u);
  return g;
}

Graph Graph::with_isolated(int extra) const {
  if (extra < 0) throw ParameterError("negative vertex count");
  if (n_ + extra > kMaxVertices) throw CapacityError("vertex count must be in 1..64");
  Graph g = *this;
  g.n_ += extra;
  g.adj_.resize(static_cast<std::size_t>(g.n_), 0);
  return g;
}

Graph Graph::induced(std::uint64_t mask) const {
  mask &= vertex_mask();
  int kept = std::popcount(mask);
  if (kept == 0) throw ParameterError("induced subgraph needs at least one vertex");
  // old index -> new compacted index
  std::vector<int> pos(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for_each_vertex(mask, [&](int v) { pos[static_cast<std::size_t>(v)] = next++; });
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(kept), 0);
  for_each_vertex(mask, [&](int v) {
    std::uint64_t row = 0;
    for_each_vertex(adj_[static_cast<std::size_t>(v)] & mask,
                    [&](int u) { row |= 1ull << pos[static_cast<std::size_t>(u)]; });
    adj[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = row;
  });
  return from_adjacency_unchecked(std::move(adj));
}

Graph Graph::relabeled(std::span<const int> labeling) const {
  if (static_cast<int>(labeling.size()) != n_)
    throw ParameterError("labeling size does not match vertex count");
  std::uint64_t seen = 0;
  for (int img : labeling) {
    if (img < 0 || img >= n_) throw ParameterError("labeling image out of range");
    seen |= 1ull << img;
  }
  if (seen != vertex_mask()) throw ParameterError("labeling is not a permutation");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n_), 0);
  for (int v = 0; v < n_; ++v) {
    std::uint64_t row = 0;
    for_each_vertex(adj_[static_cast<std::size_t>(v)],
                    [&](int u) { row |= 1ull << labeling[static_cast<std::size_t>(u)]; });
    adj[static_cast<std::size_t>(labeling[static_cast<std::size_t>(v)])] = row;
  }
  return from_adjacency_unchecked(std::move(adj));
}

Graph Graph::augmented(std::uint64_t mask) const {
  if (n_ + 1 > kMaxVertices) throw CapacityError("vertex count must be in 1..64");
  if (mask & ~vertex_mask()) throw ParameterError("augmentation mask has bits beyond n");
  Graph g = *this;
  g.n_ += 1;
  g.adj_.push_back(mask);
  for_each_vertex(mask, [&](int v) { g.adj_[static_cast<std::size_t>(v)] |= 1ull << (g.n_ - 1); });
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v + 1 < n_; ++v) {
    std::uint64_t above = adj_[static_cast<std::size_t>(v)] >> (v + 1);
    while (above) {
      out.emplace_back(v, v + 1 + std::countr_zero(above));
      above &= above - 1;
    }
  }
  return out;
}

// ---- constructions ----

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g = g.with_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  return path_graph(n).with_edge(n - 1, 0);
}

Graph complete_graph(int n) {
  Graph g(n);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.vertex_mask() & ~(1ull << v);
  return Graph::from_adjacency_unchecked(std::move(adj));
}

Graph star_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g = g.with_edge(0, v);
  return g;
}

Graph complete_split(int n, int k) {
  if (k < 1 || k > n) throw ParameterError("complete split needs 1 <= k <= n");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  const std::uint64_t clique = (k == 64) ? ~0ull : (1ull << k) - 1;
  const std::uint64_t all = (n == 64) ? ~0ull : (1ull << n) - 1;
  for (int v = 0; v < n; ++v)
    adj[static_cast<std::size_t>(v)] = (v < k ? all : clique) & ~(1ull << v);
  return Graph::from_adjacency_unchecked(std::move(adj));
}

Graph complete_split_minus(int n, int t) {
  if (t < 0 || t > n - 2) throw ParameterError("edge deficiency needs 0 <= t <= n-2");
  Graph g = complete_split(n, 2);
  for (int i = 0; i < t; ++i) g = g.without_edge(1, n - 1 - i);
  return g;
}

Graph fan_graph(int t) {
  if (t < 2) throw ParameterError("fan needs at least 2 vertices");
  return join(complete_graph(1), path_graph(t - 1));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  if (ng + nh > kMaxVertices) throw CapacityError("vertex count must be in 1..64");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(ng + nh));
  for (int v = 0; v < ng; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  for (int v = 0; v < nh; ++v) adj[static_cast<std::size_t>(ng + v)] = h.neighbors(v) << ng;
  return Graph::from_adjacency_unchecked(std::move(adj));
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  Graph u = disjoint_union(g, h);
  std::uint64_t left = (1ull << ng) - 1;
  std::uint64_t right = u.vertex_mask() & ~left;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(ng + nh));
  for (int v = 0; v < ng; ++v) adj[static_cast<std::size_t>(v)] = u.neighbors(v) | right;
  for (int v = ng; v < ng + nh; ++v) adj[static_cast<std::size_t>(v)] = u.neighbors(v) | left;
  return Graph::from_adjacency_unchecked(std::move(adj));
}

Graph build_family(const FamilyParams& params) {
  using Tag = FamilyParams::Tag;
  switch (params.tag) {
    case Tag::CompleteSplit:
      return complete_split(params.a, params.b);
    case Tag::CompleteSplitMinus:
      return complete_split_minus(params.a, params.b);
    case Tag::Fan:
      return fan_graph(params.a);
    case Tag::Path:
      return path_graph(params.a);
    case Tag::Cycle:
      return cycle_graph(params.a);
    case Tag::Complete:
      return complete_graph(params.a);
    case Tag::Star:
      return star_graph(params.a);
    case Tag::Union:
    case Tag::Join: {
      if (!params.left || !params.right) throw ParameterError("binary family node missing a child");
      Graph l = build_family(*params.left);
      Graph r = build_family(*params.right);
      return params.tag == Tag::Union ? disjoint_union(l, r) : join(l, r);
    }
  }
  throw ParameterError("unknown family tag");
}

// ---- structure queries ----

std::vector<std::uint64_t> components_within(const Graph& g, std::uint64_t mask) {
  std::vector<std::uint64_t> out;
  std::uint64_t unseen = mask & g.vertex_mask();
  while (unseen) {
    std::uint64_t comp = 1ull << std::countr_zero(unseen);
    // closure over whole neighbor words at a time
    for (;;) {
      std::uint64_t grown = comp;
      for_each_vertex(comp, [&](int v) { grown |= g.neighbors(v) & mask; });
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

std::vector<std::uint64_t> components(const Graph& g) {
  return components_within(g, g.vertex_mask());
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_isolated_free(const Graph& g) { return g.min_degree() >= 1; }

}  // namespace gemex
