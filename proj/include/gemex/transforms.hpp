#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gemex/graph.hpp"

namespace gemex {

// Move the edges v-v_i (v_i ranging over `moved`) onto u. Raises the spectral
// radius whenever the Perron coordinate of u is at least that of v.
struct RotationSpec {
  int u = 0;
  int v = 0;
  std::uint64_t moved = 0;  // nonempty subset of N(v) avoiding N(u) and u
};

Graph rotate(const Graph& g, const RotationSpec& spec);

struct RotationReport {
  bool hypothesis_satisfied = false;  // x_u >= x_v - tol
  double x_u = 0.0;
  double x_v = 0.0;
  double rho_before = 0.0;
  double rho_after = 0.0;
  double margin = 0.0;  // rho_after - rho_before
};

// Checks the rotation's hypothesis against g's Perron vector and measures the
// radius change. An unmet hypothesis is reported, not an error.
RotationReport check_rotation_lemma(const Graph& g, const RotationSpec& spec, double tol = 1e-12);

// Decomposition of a graph shaped like the extremal candidates: hub u* whose
// neighborhood splits into a star (center v plus its leaves) and b vertices
// isolated inside it, with every remaining vertex w_i adjacent only to
// leaves, at least twice, and to no other w. w_eliminate validates all of
// this from scratch before touching anything.
struct SurgeryPlan {
  int u_star = 0;
  int v = 0;
  std::uint64_t leaves = 0;
  std::uint64_t isolated = 0;
  std::uint64_t w = 0;
};

struct SurgeryStages {
  Graph padded;   // input plus the new isolated vertices
  Graph rewired;  // w-leaf edges traded for hub/center edges to the new vertices
  Graph result;   // w vertices dropped
  int t = 0;      // realized edge deficiency of the resulting split family member
  std::vector<std::uint64_t> added_per_w;  // new-vertex masks, one per w ascending
};

// Replace every w_i of degree d_i by ceil(d_i/2) fresh vertices: each fresh
// vertex is joined to u* and v, except one joined to u* alone when d_i is
// odd. Edge count is preserved and the result is S_{n',2}^{-t} with
// t = b + #{i : d_i odd}.
SurgeryStages w_eliminate_stages(const Graph& g, const SurgeryPlan& plan);
Graph w_eliminate(const Graph& g, const SurgeryPlan& plan);

// y^T (A(after) - A(before)) z, summed over the edge-set symmetric
// difference. With y, z the Perron vectors of the two graphs this equals
// (rho(after) - rho(before)) y^T z.
double cross_gap(const Graph& before, const Graph& after, const Eigen::VectorXd& y,
                 const Eigen::VectorXd& z);

struct FamilyRow {
  int t = 0;
  int n = 0;
  double rho = 0.0;
};

// Radii of all S_{(m+t+3)/2,2}^{-t} with m edges, t <= t_max of matching
// parity. The t=0 (odd m) or t=1 (even m) member is the reference the others
// must stay strictly below.
struct FamilyComparison {
  int m = 0;
  std::vector<FamilyRow> rows;  // sorted by rho descending, ties by t
  int reference_t = 0;
  double reference_rho = 0.0;
  double min_margin = 0.0;  // reference_rho minus the best non-reference row
  bool strict = false;      // true when min_margin > 0
};

FamilyComparison compare_families(int m, int t_max);

}  // namespace gemex
