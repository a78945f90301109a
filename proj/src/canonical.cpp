#include "gemex/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "gemex/graph6.hpp"

namespace gemex {

namespace {

// A column holds the adjacency of a newly placed vertex to the vertices
// already placed: bit i = adjacent to position i. Reading positions first to
// last gives the bit string, so the lowest set bit of a difference decides.
bool column_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  return ((a >> std::countr_zero(a ^ b)) & 1u) == 0;
}

// Union-find keeping the least vertex of each class as its representative.
struct OrbitForest {
  std::vector<int> parent;

  explicit OrbitForest(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
  }
};

std::vector<int> checked_colors(const Graph& g, std::span<const int> colors) {
  if (colors.empty()) return {};
  if (static_cast<int>(colors.size()) != g.vertex_count())
    throw ParameterError("color count does not match vertex count");
  return {colors.begin(), colors.end()};
}

// Exhaustive search over vertex orderings for the one whose adjacency column
// string is smallest. Prunes orderings as soon as a column exceeds the best
// known prefix, and skips a sibling whose swap with an already tried sibling
// is an automorphism (interchangeable vertices reach the same completions).
// Each completed ordering that ties the current best yields an automorphism
// against the first such ordering; those plus the recorded swaps generate the
// full (color-preserving) automorphism group, so the orbit forest is exact.
struct BruteEngine {
  const Graph& g;
  int n;
  std::vector<int> colors;
  std::vector<int> pos_color;

  std::vector<int> seq;
  std::uint64_t used = 0;
  std::vector<std::uint64_t> best_cols;
  int best_len = 0;
  bool best_complete = false;
  std::vector<int> anchor;
  std::vector<std::vector<int>> gens;
  std::set<std::pair<int, int>> swaps_seen;
  OrbitForest orbits;

  BruteEngine(const Graph& graph, std::vector<int> cols)
      : g(graph), n(graph.vertex_count()), colors(std::move(cols)), orbits(n) {
    if (!colors.empty()) {
      pos_color = colors;
      std::sort(pos_color.begin(), pos_color.end());
    }
    seq.reserve(static_cast<std::size_t>(n));
    best_cols.assign(static_cast<std::size_t>(n), 0);
  }

  void note_swap(int u, int v) {
    if (!swaps_seen.insert({std::min(u, v), std::max(u, v)}).second) return;
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 0);
    std::swap(a[static_cast<std::size_t>(u)], a[static_cast<std::size_t>(v)]);
    gens.push_back(std::move(a));
    orbits.unite(u, v);
  }

  void leaf() {
    if (best_complete) {
      std::vector<int> a(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(anchor[static_cast<std::size_t>(i)])] =
            seq[static_cast<std::size_t>(i)];
        orbits.unite(anchor[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>(i)]);
      }
      gens.push_back(std::move(a));
    } else {
      anchor = seq;
      best_complete = true;
    }
  }

  void dfs(int depth) {
    if (depth == n) {
      leaf();
      return;
    }
    int tried[kMaxVertices];
    int tried_count = 0;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      if (!colors.empty() &&
          colors[static_cast<std::size_t>(v)] != pos_color[static_cast<std::size_t>(depth)])
        continue;
      bool skip = false;
      for (int i = 0; i < tried_count; ++i) {
        const int u = tried[i];
        const std::uint64_t off = ~((1ull << u) | (1ull << v));
        if ((g.neighbors(u) & off) == (g.neighbors(v) & off)) {
          note_swap(u, v);
          skip = true;
          break;
        }
      }
      if (skip) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < depth; ++i)
        col |= static_cast<std::uint64_t>(g.has_edge(v, seq[static_cast<std::size_t>(i)])) << i;
      if (depth < best_len) {
        if (col != best_cols[static_cast<std::size_t>(depth)]) {
          if (!column_less(col, best_cols[static_cast<std::size_t>(depth)])) continue;
          best_cols[static_cast<std::size_t>(depth)] = col;
          best_len = depth + 1;
          best_complete = false;
        }
      } else {
        best_cols[static_cast<std::size_t>(depth)] = col;
        best_len = depth + 1;
        best_complete = false;
      }
      seq.push_back(v);
      used |= 1ull << v;
      dfs(depth + 1);
      used &= ~(1ull << v);
      seq.pop_back();
      tried[tried_count++] = v;
    }
  }
};

// Individualization-refinement search. Refinement splits cells by how many
// neighbors a vertex has in every other cell; once a partition is discrete
// its cell order is a candidate labeling. Branching individualizes each
// member of the first smallest non-discrete cell in turn, skipping members
// that a product of already recorded automorphisms fixing the individualized
// prefix maps onto a sibling already tried. The best leaf over the whole tree
// is isomorphism-invariant, and the same counting argument as in the brute
// engine makes the orbit forest exact.
struct RefineEngine {
  const Graph& g;
  int n;
  std::vector<int> colors;

  std::vector<int> prefix;
  std::vector<std::uint64_t> best_cols;
  bool have_best = false;
  std::vector<int> anchor;
  std::vector<std::vector<int>> gens;
  OrbitForest orbits;

  RefineEngine(const Graph& graph, std::vector<int> cols)
      : g(graph), n(graph.vertex_count()), colors(std::move(cols)), orbits(n) {}

  std::vector<std::uint64_t> initial_cells() const {
    if (colors.empty()) return {g.vertex_mask()};
    std::map<int, std::uint64_t> classes;
    for (int v = 0; v < n; ++v) classes[colors[static_cast<std::size_t>(v)]] |= 1ull << v;
    std::vector<std::uint64_t> cells;
    cells.reserve(classes.size());
    for (auto& [color, mask] : classes) cells.push_back(mask);
    return cells;
  }

  void refine(std::vector<std::uint64_t>& cells) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
        if (std::popcount(cells[ci]) <= 1) continue;
        std::map<std::vector<int>, std::uint64_t> groups;
        for_each_vertex(cells[ci], [&](int v) {
          std::vector<int> sig;
          sig.reserve(cells.size());
          for (std::uint64_t cell : cells) sig.push_back(std::popcount(g.neighbors(v) & cell));
          groups[std::move(sig)] |= 1ull << v;
        });
        if (groups.size() <= 1) continue;
        std::vector<std::uint64_t> split;
        split.reserve(cells.size() + groups.size() - 1);
        split.insert(split.end(), cells.begin(), cells.begin() + static_cast<long>(ci));
        for (auto& [sig, mask] : groups) split.push_back(mask);
        split.insert(split.end(), cells.begin() + static_cast<long>(ci) + 1, cells.end());
        cells = std::move(split);
        changed = true;
      }
    }
  }

  void leaf(const std::vector<std::uint64_t>& cells) {
    std::vector<int> seq;
    seq.reserve(cells.size());
    for (std::uint64_t cell : cells) seq.push_back(std::countr_zero(cell));
    std::vector<std::uint64_t> cols(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
      std::uint64_t col = 0;
      for (int i = 0; i < k; ++i)
        col |= static_cast<std::uint64_t>(
                   g.has_edge(seq[static_cast<std::size_t>(k)], seq[static_cast<std::size_t>(i)]))
               << i;
      cols[static_cast<std::size_t>(k)] = col;
    }
    if (have_best) {
      int cmp = 0;
      for (int k = 0; k < n && cmp == 0; ++k) {
        const std::uint64_t a = cols[static_cast<std::size_t>(k)];
        const std::uint64_t b = best_cols[static_cast<std::size_t>(k)];
        if (a != b) cmp = column_less(a, b) ? -1 : 1;
      }
      if (cmp > 0) return;
      if (cmp == 0) {
        std::vector<int> a(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
          a[static_cast<std::size_t>(anchor[static_cast<std::size_t>(i)])] =
              seq[static_cast<std::size_t>(i)];
          orbits.unite(anchor[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>(i)]);
        }
        gens.push_back(std::move(a));
        return;
      }
    }
    best_cols = std::move(cols);
    anchor = std::move(seq);
    have_best = true;
  }

  void search(std::vector<std::uint64_t> cells) {
    refine(cells);
    std::size_t target = cells.size();
    int target_size = n + 1;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      const int size = std::popcount(cells[ci]);
      if (size > 1 && size < target_size) {
        target = ci;
        target_size = size;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> members;
    members.reserve(static_cast<std::size_t>(target_size));
    for_each_vertex(cells[target], [&](int v) { members.push_back(v); });

    OrbitForest prefix_fixing(n);
    std::size_t gens_absorbed = 0;
    auto absorb = [&] {
      for (; gens_absorbed < gens.size(); ++gens_absorbed) {
        const std::vector<int>& a = gens[gens_absorbed];
        bool fixes = true;
        for (int p : prefix)
          if (a[static_cast<std::size_t>(p)] != p) {
            fixes = false;
            break;
          }
        if (!fixes) continue;
        for (int v = 0; v < n; ++v) prefix_fixing.unite(v, a[static_cast<std::size_t>(v)]);
      }
    };

    std::vector<int> tried;
    for (int v : members) {
      absorb();
      bool skip = false;
      for (int u : tried)
        if (prefix_fixing.find(u) == prefix_fixing.find(v)) {
          skip = true;
          break;
        }
      if (skip) continue;
      std::vector<std::uint64_t> child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<long>(target));
      child.push_back(1ull << v);
      child.push_back(cells[target] & ~(1ull << v));
      child.insert(child.end(), cells.begin() + static_cast<long>(target) + 1, cells.end());
      prefix.push_back(v);
      search(std::move(child));
      prefix.pop_back();
      tried.push_back(v);
    }
  }
};

CanonicalAnalysis finalize(const Graph& g, const std::vector<int>& anchor, OrbitForest& orbits,
                           std::vector<std::vector<int>> gens) {
  const int n = g.vertex_count();
  CanonicalAnalysis out;
  out.labeling.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    out.labeling[static_cast<std::size_t>(anchor[static_cast<std::size_t>(i)])] = i;
  out.orbit.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out.orbit[static_cast<std::size_t>(v)] = orbits.find(v);
  out.generators = std::move(gens);
  out.key = to_graph6(g.relabeled(out.labeling));
  return out;
}

}  // namespace

namespace detail {

CanonicalAnalysis analyze_brute(const Graph& g, std::span<const int> colors) {
  BruteEngine engine(g, checked_colors(g, colors));
  engine.dfs(0);
  return finalize(g, engine.anchor, engine.orbits, std::move(engine.gens));
}

CanonicalAnalysis analyze_refined(const Graph& g, std::span<const int> colors) {
  RefineEngine engine(g, checked_colors(g, colors));
  engine.search(engine.initial_cells());
  return finalize(g, engine.anchor, engine.orbits, std::move(engine.gens));
}

}  // namespace detail

CanonicalAnalysis analyze(const Graph& g) { return analyze(g, {}); }

CanonicalAnalysis analyze(const Graph& g, std::span<const int> colors) {
  return g.vertex_count() <= 8 ? detail::analyze_brute(g, colors)
                               : detail::analyze_refined(g, colors);
}

std::string canonical_form(const Graph& g) { return analyze(g).key; }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return analyze(a).key == analyze(b).key;
}

}  // namespace gemex
