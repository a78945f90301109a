#include "gemex/transforms.hpp"

#include <algorithm>
#include <string>

#include "gemex/spectral.hpp"

namespace gemex {

namespace {

void check_vertex(const Graph& g, int v, const char* what) {
  if (v < 0 || v >= g.vertex_count())
    throw ParameterError(std::string(what) + " vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Graph rotate(const Graph& g, const RotationSpec& spec) {
  check_vertex(g, spec.u, "rotation");
  check_vertex(g, spec.v, "rotation");
  if (spec.u == spec.v) throw ParameterError("rotation endpoints must differ");
  if (spec.moved == 0) throw ParameterError("rotation moves no vertices");
  if (spec.moved & ~g.vertex_mask()) throw ParameterError("moved set has bits beyond n");
  if (spec.moved & ~g.neighbors(spec.v))
    throw ParameterError("moved set must lie inside the neighborhood of v");
  if (spec.moved & (g.neighbors(spec.u) | (1ull << spec.u)))
    throw ParameterError("moved set must avoid u and its neighborhood");
  Graph out = g;
  for_each_vertex(spec.moved, [&](int vi) {
    out = out.without_edge(spec.v, vi).with_edge(spec.u, vi);
  });
  return out;
}

RotationReport check_rotation_lemma(const Graph& g, const RotationSpec& spec, double tol) {
  if (!is_connected(g)) throw StructuralError("rotation check needs a connected graph");
  const PerronResult before = perron(g);
  const PerronResult after = perron(rotate(g, spec));
  RotationReport report;
  report.x_u = before.x[spec.u];
  report.x_v = before.x[spec.v];
  report.hypothesis_satisfied = report.x_u >= report.x_v - tol;
  report.rho_before = before.rho;
  report.rho_after = after.rho;
  report.margin = after.rho - before.rho;
  return report;
}

namespace {

void validate_plan(const Graph& g, const SurgeryPlan& plan) {
  check_vertex(g, plan.u_star, "surgery hub");
  check_vertex(g, plan.v, "surgery center");
  const std::uint64_t all = g.vertex_mask();
  if ((plan.leaves | plan.isolated | plan.w) & ~all)
    throw ParameterError("surgery plan has bits beyond n");

  const std::uint64_t hub_bit = 1ull << plan.u_star;
  const std::uint64_t v_bit = 1ull << plan.v;
  const std::uint64_t u_set = v_bit | plan.leaves | plan.isolated;
  if (v_bit & (plan.leaves | plan.isolated))
    throw StructuralError("center listed among leaves or isolated vertices");
  if (plan.leaves & plan.isolated)
    throw StructuralError("leaves and isolated vertices overlap");
  if ((hub_bit & u_set) || (hub_bit & plan.w)) throw StructuralError("hub listed in its own parts");
  if (g.neighbors(plan.u_star) != u_set)
    throw StructuralError("hub neighborhood does not match center + leaves + isolated");
  if ((all & ~hub_bit & ~u_set) != plan.w)
    throw StructuralError("w set does not cover the vertices outside the hub's ball");
  if (plan.leaves == 0) throw StructuralError("star must have at least one leaf");

  if ((g.neighbors(plan.v) & u_set) != plan.leaves)
    throw StructuralError("center must be adjacent to exactly the leaves inside U");
  bool ok = true;
  for_each_vertex(plan.leaves, [&](int leaf) {
    if ((g.neighbors(leaf) & u_set) != v_bit) ok = false;
  });
  if (!ok) throw StructuralError("every leaf must see only the center inside U");
  for_each_vertex(plan.isolated, [&](int u) {
    if (g.neighbors(u) & u_set) ok = false;
  });
  if (!ok) throw StructuralError("isolated U vertices must have no neighbor inside U");
  for_each_vertex(plan.w, [&](int w) {
    if (g.neighbors(w) & plan.w) ok = false;
  });
  if (!ok) throw StructuralError("w vertices must be pairwise nonadjacent");
  for_each_vertex(plan.w, [&](int w) {
    if (g.neighbors(w) & ~plan.leaves) ok = false;
  });
  if (!ok) throw StructuralError("w vertices may only touch leaves");
  for_each_vertex(plan.w, [&](int w) {
    if (g.degree(w) < 2) ok = false;
  });
  if (!ok) throw StructuralError("every w needs at least two leaf neighbors");
}

}  // namespace

SurgeryStages w_eliminate_stages(const Graph& g, const SurgeryPlan& plan) {
  validate_plan(g, plan);

  int fresh = 0;
  for_each_vertex(plan.w, [&](int w) { fresh += (g.degree(w) + 1) / 2; });
  if (g.vertex_count() + fresh > kMaxVertices)
    throw CapacityError("surgery needs " + std::to_string(g.vertex_count() + fresh) +
                        " transient vertices, cap is 64");

  SurgeryStages stages{g.with_isolated(fresh), g.with_isolated(fresh), g, 0, {}};
  Graph work = stages.padded;
  int next = g.vertex_count();
  int odd_count = 0;
  for_each_vertex(plan.w, [&](int w) {
    const int d = g.degree(w);
    for_each_vertex(g.neighbors(w), [&](int leaf) { work = work.without_edge(w, leaf); });
    std::uint64_t block = 0;
    if (d % 2 != 0) {
      // odd degree: the first fresh vertex hangs off the hub alone
      work = work.with_edge(plan.u_star, next);
      block |= 1ull << next;
      ++next;
      ++odd_count;
    }
    for (int j = 0; j < d / 2; ++j) {
      work = work.with_edge(plan.u_star, next).with_edge(plan.v, next);
      block |= 1ull << next;
      ++next;
    }
    stages.added_per_w.push_back(block);
  });
  stages.rewired = work;
  stages.result = work.induced(work.vertex_mask() & ~plan.w);
  stages.t = std::popcount(plan.isolated) + odd_count;
  return stages;
}

Graph w_eliminate(const Graph& g, const SurgeryPlan& plan) {
  return w_eliminate_stages(g, plan).result;
}

double cross_gap(const Graph& before, const Graph& after, const Eigen::VectorXd& y,
                 const Eigen::VectorXd& z) {
  const int n = before.vertex_count();
  if (after.vertex_count() != n) throw ParameterError("cross gap needs a shared vertex set");
  if (y.size() != n || z.size() != n)
    throw ParameterError("cross gap vectors must match the vertex count");
  double gap = 0.0;
  for (int p = 0; p < n; ++p) {
    const std::uint64_t changed = before.neighbors(p) ^ after.neighbors(p);
    for_each_vertex(changed, [&](int q) {
      const double sign = after.has_edge(p, q) ? 1.0 : -1.0;
      gap += sign * y[p] * z[q];  // each unordered pair visited from both ends
    });
  }
  return gap;
}

FamilyComparison compare_families(int m, int t_max) {
  if (t_max < 0) throw ParameterError("t_max must be nonnegative");
  if (m <= t_max + 1) throw ParameterError("family comparison needs m > t_max + 1");
  FamilyComparison cmp;
  cmp.m = m;
  cmp.reference_t = m % 2 == 0 ? 1 : 0;
  for (int t = cmp.reference_t; t <= t_max; t += 2) {
    const int n = (m + t + 3) / 2;
    const double rho = split_minus_rho(n, t);
    cmp.rows.push_back({t, n, rho});
    if (t == cmp.reference_t) cmp.reference_rho = rho;
  }
  double best_other = -1.0;
  for (const FamilyRow& row : cmp.rows)
    if (row.t != cmp.reference_t) best_other = std::max(best_other, row.rho);
  cmp.min_margin = best_other < 0.0 ? 0.0 : cmp.reference_rho - best_other;
  cmp.strict = best_other < 0.0 || cmp.min_margin > 0.0;
  std::sort(cmp.rows.begin(), cmp.rows.end(), [](const FamilyRow& a, const FamilyRow& b) {
    if (a.rho != b.rho) return a.rho > b.rho;
    return a.t < b.t;
  });
  return cmp;
}

}  // namespace gemex
