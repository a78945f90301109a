#include "gemex/patterns.hpp"

#include <algorithm>
#include <vector>

namespace gemex {

namespace {

bool extend_path(const Graph& g, std::uint64_t mask, int last, std::uint64_t visited, int left) {
  if (left == 0) return true;
  std::uint64_t next = g.neighbors(last) & mask & ~visited;
  bool found = false;
  for_each_vertex(next, [&](int v) {
    if (!found && extend_path(g, mask, v, visited | (1ull << v), left - 1)) found = true;
  });
  return found;
}

bool contains_fan(const Graph& g, int t) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < t - 1) continue;
    if (detail::has_path_in_mask(g, g.neighbors(v), t - 1)) return true;
  }
  return false;
}

// Backtracking embedding of an arbitrary pattern. Pattern vertices are placed
// most-constrained-first (most already placed neighbors, then highest
// degree); candidates are intersections of the images' neighborhoods.
struct Embedder {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> order;
  std::vector<int> image;
  std::uint64_t used = 0;

  Embedder(const Graph& h, const Graph& p)
      : host(h), pattern(p), image(static_cast<std::size_t>(p.vertex_count()), -1) {
    const int k = pattern.vertex_count();
    std::uint64_t placed = 0;
    for (int step = 0; step < k; ++step) {
      int best = -1, best_links = -1, best_deg = -1;
      for (int v = 0; v < k; ++v) {
        if ((placed >> v) & 1u) continue;
        const int links = std::popcount(pattern.neighbors(v) & placed);
        const int deg = pattern.degree(v);
        if (links > best_links || (links == best_links && deg > best_deg)) {
          best = v;
          best_links = links;
          best_deg = deg;
        }
      }
      order.push_back(best);
      placed |= 1ull << best;
    }
  }

  bool place(std::size_t step) {
    if (step == order.size()) return true;
    const int pv = order[step];
    std::uint64_t candidates = host.vertex_mask() & ~used;
    for_each_vertex(pattern.neighbors(pv), [&](int pu) {
      if (image[static_cast<std::size_t>(pu)] >= 0)
        candidates &= host.neighbors(image[static_cast<std::size_t>(pu)]);
    });
    const int need = pattern.degree(pv);
    bool found = false;
    for_each_vertex(candidates, [&](int hv) {
      if (found || host.degree(hv) < need) return;
      image[static_cast<std::size_t>(pv)] = hv;
      used |= 1ull << hv;
      if (place(step + 1)) found = true;
      used &= ~(1ull << hv);
      image[static_cast<std::size_t>(pv)] = -1;
    });
    return found;
  }
};

bool oracle_place(const Graph& host, const Graph& pattern, std::vector<int>& image,
                  std::uint64_t used, int pv) {
  if (pv == pattern.vertex_count()) return true;
  for (int hv = 0; hv < host.vertex_count(); ++hv) {
    if ((used >> hv) & 1u) continue;
    bool ok = true;
    for (int pu = 0; pu < pv && ok; ++pu)
      if (pattern.has_edge(pu, pv) && !host.has_edge(image[static_cast<std::size_t>(pu)], hv))
        ok = false;
    if (!ok) continue;
    image[static_cast<std::size_t>(pv)] = hv;
    if (oracle_place(host, pattern, image, used | (1ull << hv), pv + 1)) return true;
  }
  return false;
}

}  // namespace

namespace detail {

bool has_path_in_mask(const Graph& g, std::uint64_t mask, int len) {
  if (std::popcount(mask) < len) return false;
  if (len <= 0) return true;
  if (len == 1) return mask != 0;
  bool found = false;
  for_each_vertex(mask, [&](int s) {
    if (!found && extend_path(g, mask, s, 1ull << s, len - 1)) found = true;
  });
  return found;
}

bool edge_completes_gem(const Graph& g, int p, int q) {
  std::uint64_t apexes = (1ull << p) | (1ull << q) | (g.neighbors(p) & g.neighbors(q));
  bool found = false;
  for_each_vertex(apexes, [&](int a) {
    if (found || g.degree(a) < 4) return;
    if (has_path_in_mask(g, g.neighbors(a), 4)) found = true;
  });
  return found;
}

}  // namespace detail

bool contains_subgraph(const Graph& g, const PatternSpec& p) {
  if (p.is_fan()) return contains_fan(g, p.fan_order());
  const Graph& pattern = p.pattern();
  if (pattern.vertex_count() > g.vertex_count()) return false;
  if (pattern.edge_count() > g.edge_count()) return false;
  Embedder embedder(g, pattern);
  return embedder.place(0);
}

bool is_gem_free(const Graph& g) { return !contains_subgraph(g, PatternSpec::gem()); }

bool oracle_contains(const Graph& g, const PatternSpec& p) {
  const Graph& pattern = p.pattern();
  if (pattern.vertex_count() > 8) throw CapacityError("oracle pattern capped at 8 vertices");
  if (g.vertex_count() > 16) throw CapacityError("oracle host capped at 16 vertices");
  if (pattern.vertex_count() > g.vertex_count()) return false;
  std::vector<int> image(static_cast<std::size_t>(pattern.vertex_count()), -1);
  return oracle_place(g, pattern, image, 0, 0);
}

}  // namespace gemex
