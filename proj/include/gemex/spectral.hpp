#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gemex/graph.hpp"

namespace gemex {

// Perron root and vector, normalized so the maximum coordinate is exactly 1.
// `residual` is the worst row defect max_v |rho*x_v - sum_{u~v} x_u|.
struct PerronResult {
  double rho = 0.0;
  Eigen::VectorXd x;
  int iterations = 0;
  double residual = 0.0;
};

// Power iteration per connected component, run on A+I so bipartite components
// (whose adjacency action has period 2) still converge; the winning
// component's vector is zero-extended over the rest of the graph.
PerronResult perron(const Graph& g, double tol = 1e-12, int max_iter = 200000);

Eigen::MatrixXd adjacency_matrix(const Graph& g);

// (1 + sqrt(4m-3))/2: the spectral ceiling for odd edge counts, attained by
// K_2 joined to (m-1)/2 isolated vertices.
double bound_odd(int m);

// (1 + sqrt(4m-5))/2: strict lower estimate for the even-m ceiling.
double threshold_lower(int m);

// Largest root of x^4 - m x^2 - (m-2) x + (m/2 - 1), the even-m ceiling,
// equal to the spectral radius of S_{(m+4)/2,2} minus one edge. Bracketed
// between threshold_lower(m) and (1+sqrt(4m+1))/2, then bisection + Newton
// polish until |p(root)| <= tol * m^2.
double rho_star(int m, double tol = 1e-12);

// sum_{u in V} (d_V(u) - 1) x_u - e(V), with degrees inside the induced
// subgraph on V; zero for the empty set.
double eta1(std::uint64_t vertex_set, const Graph& g, const Eigen::VectorXd& x);

// Spectral radius of S_{n,2}^{-t} for any order, through the divisor matrix
// of its four-class equitable partition (hub, partner, doubly joined
// vertices, hub-only vertices). Works past the 64-vertex graph cap and is
// what the family comparator uses. Requires 0 <= t <= n-2; empty classes are
// dropped from the quotient.
double split_minus_rho(int n, int t);

enum class ComponentClass { Triangle, Star, Isolated, Other };

// Eigenvector certificate around the hub u*, the least vertex of maximum
// coordinate. With U = N(u*) and W the rest, a converged Perron pair must
// satisfy (writing d_U(z) for |N(z) n U|):
//   rho          = sum_{u in U} x_u                                   (1)
//   rho^2        = d(u*) + sum_{u in U} d_U(u) x_u + sum_{w in W} d_U(w) x_w  (2)
//   rho^2 - rho  = d(u*) + sum_{u in U} (d_U(u)-1) x_u + sum_{w in W} d_U(w) x_w  (3)
// The residuals record how far the supplied pair is from each.
struct SpectralCertificate {
  int u_star = 0;
  std::uint64_t U = 0;
  std::uint64_t W = 0;
  double eta1_U = 0.0;
  std::vector<double> eta1_per_component;     // one entry per component of G[U]
  std::vector<ComponentClass> component_classes;
  int e_W = 0;
  int e_UW = 0;
  double identity1_residual = 0.0;
  double identity2_residual = 0.0;
  double identity3_residual = 0.0;
};

SpectralCertificate certificate(const Graph& g, const PerronResult& pr);

const char* to_string(ComponentClass c);

}  // namespace gemex
