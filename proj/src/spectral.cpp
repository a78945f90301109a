#include "gemex/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gemex {

namespace {

// One component's Perron data, written into the full-length vector slots.
struct ComponentPerron {
  double rho;
  int iterations;
};

double row_defect(const Graph& g, std::uint64_t comp, double rho, const Eigen::VectorXd& x) {
  double worst = 0.0;
  for_each_vertex(comp, [&](int v) {
    double row = 0.0;
    for_each_vertex(g.neighbors(v), [&](int u) { row += x[u]; });
    worst = std::max(worst, std::abs(rho * x[v] - row));
  });
  return worst;
}

ComponentPerron power_component(const Graph& g, std::uint64_t comp, double tol, int max_iter,
                                Eigen::VectorXd& x) {
  const int size = std::popcount(comp);
  for_each_vertex(comp, [&](int v) { x[v] = 1.0; });
  if (size == 1) return {0.0, 0};

  Eigen::VectorXd ax = Eigen::VectorXd::Zero(x.size());
  double rho = 0.0;
  double defect = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    double dot_ax = 0.0, dot_xx = 0.0;
    for_each_vertex(comp, [&](int v) {
      double row = 0.0;
      for_each_vertex(g.neighbors(v), [&](int u) { row += x[u]; });
      ax[v] = row;
      dot_ax += row * x[v];
      dot_xx += x[v] * x[v];
    });
    rho = dot_ax / dot_xx;
    defect = 0.0;
    for_each_vertex(comp, [&](int v) { defect = std::max(defect, std::abs(ax[v] - rho * x[v])); });
    if (defect <= tol) return {rho, it};
    // advance with A+I and renormalize to sup norm 1
    double sup = 0.0;
    for_each_vertex(comp, [&](int v) {
      ax[v] += x[v];
      sup = std::max(sup, ax[v]);
    });
    for_each_vertex(comp, [&](int v) { x[v] = ax[v] / sup; });
  }
  throw ConvergenceError("power iteration stalled after " + std::to_string(max_iter) +
                             " iterations",
                         defect);
}

}  // namespace

PerronResult perron(const Graph& g, double tol, int max_iter) {
  if (tol <= 0.0) throw ParameterError("tolerance must be positive");
  if (max_iter < 1) throw ParameterError("iteration budget must be positive");

  PerronResult best;
  best.rho = -1.0;
  int total_iterations = 0;
  Eigen::VectorXd scratch = Eigen::VectorXd::Zero(g.vertex_count());
  for (std::uint64_t comp : components(g)) {
    scratch.setZero();
    ComponentPerron cp = power_component(g, comp, tol, max_iter, scratch);
    total_iterations += cp.iterations;
    if (cp.rho > best.rho) {
      best.rho = cp.rho;
      best.x = scratch;
    }
  }
  best.iterations = total_iterations;
  best.x /= best.x.maxCoeff();
  best.residual = row_defect(g, g.vertex_mask(), best.rho, best.x);
  return best;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

double bound_odd(int m) {
  if (m < 1) throw ParameterError("edge count must be at least 1");
  return (1.0 + std::sqrt(4.0 * m - 3.0)) / 2.0;
}

double threshold_lower(int m) {
  if (m < 2) throw ParameterError("edge count must be at least 2");
  return (1.0 + std::sqrt(4.0 * m - 5.0)) / 2.0;
}

double rho_star(int m, double tol) {
  if (m < 2 || m % 2 != 0) throw ParameterError("rho_star needs an even edge count >= 2");
  if (tol <= 0.0) throw ParameterError("tolerance must be positive");
  const auto p = [m](double x) {
    return ((x * x - m) * x - (m - 2)) * x + (0.5 * m - 1.0);
  };
  const auto dp = [m](double x) { return (4.0 * x * x - 2.0 * m) * x - (m - 2); };

  double lo = threshold_lower(m);
  double hi = (1.0 + std::sqrt(4.0 * m + 1.0)) / 2.0;
  if (!(p(lo) < 0.0 && p(hi) > 0.0))
    throw std::logic_error("rho_star bracket does not straddle the root");
  for (int it = 0; it < 80 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (p(mid) < 0.0 ? lo : hi) = mid;
  }
  double root = 0.5 * (lo + hi);
  for (int it = 0; it < 20 && std::abs(p(root)) > 0.25 * tol * m * m; ++it)
    root -= p(root) / dp(root);
  if (std::abs(p(root)) > tol * m * m)
    throw std::logic_error("rho_star polish failed to reach tolerance");
  return root;
}

double split_minus_rho(int n, int t) {
  if (t < 0 || t > n - 2) throw ParameterError("edge deficiency needs 0 <= t <= n-2");
  const int b = n - 2 - t;  // independent vertices joined to both hub and partner
  // Vertex classes: hub, partner, both-joined (b of them), hub-only (t of them).
  // The partition is equitable, so the largest eigenvalue of the class-counting
  // quotient matrix equals the spectral radius of the full graph.
  const int sizes[4] = {1, 1, b, t};
  const int counts[4][4] = {
      {0, 1, b, t},
      {1, 0, b, 0},
      {1, 1, 0, 0},
      {1, 0, 0, 0},
  };
  int keep[4];
  int size = 0;
  for (int c = 0; c < 4; ++c)
    if (sizes[c] > 0) keep[size++] = c;
  Eigen::MatrixXd divisor(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) divisor(i, j) = counts[keep[i]][keep[j]];
  const auto eigenvalues = Eigen::EigenSolver<Eigen::MatrixXd>(divisor, false).eigenvalues();
  double rho = eigenvalues[0].real();
  for (int i = 1; i < eigenvalues.size(); ++i) rho = std::max(rho, eigenvalues[i].real());
  return rho;
}

double eta1(std::uint64_t vertex_set, const Graph& g, const Eigen::VectorXd& x) {
  vertex_set &= g.vertex_mask();
  double sum = 0.0;
  int twice_edges = 0;
  for_each_vertex(vertex_set, [&](int v) {
    const int d = std::popcount(g.neighbors(v) & vertex_set);
    sum += (d - 1) * x[v];
    twice_edges += d;
  });
  return sum - twice_edges / 2;
}

const char* to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::Triangle: return "triangle";
    case ComponentClass::Star: return "star";
    case ComponentClass::Isolated: return "isolated";
    case ComponentClass::Other: return "other";
  }
  return "other";
}

SpectralCertificate certificate(const Graph& g, const PerronResult& pr) {
  if (!is_connected(g)) throw StructuralError("certificate needs a connected graph");
  const int n = g.vertex_count();
  if (pr.x.size() != n) throw ParameterError("eigenvector length does not match graph");

  SpectralCertificate cert;
  const double top = pr.x.maxCoeff();
  for (int v = 0; v < n; ++v)
    if (pr.x[v] >= top - 1e-12) {
      cert.u_star = v;
      break;
    }
  cert.U = g.neighbors(cert.u_star);
  cert.W = g.vertex_mask() & ~cert.U & ~(1ull << cert.u_star);

  const double rho = pr.rho;
  double sum_u = 0.0;        // sum of x over U
  double sum_du_u = 0.0;     // sum of d_U(u) x_u over U
  double sum_du_w = 0.0;     // sum of d_U(w) x_w over W
  for_each_vertex(cert.U, [&](int u) {
    sum_u += pr.x[u];
    sum_du_u += std::popcount(g.neighbors(u) & cert.U) * pr.x[u];
  });
  int e_uw = 0, twice_e_w = 0;
  for_each_vertex(cert.W, [&](int w) {
    const int d_u = std::popcount(g.neighbors(w) & cert.U);
    sum_du_w += d_u * pr.x[w];
    e_uw += d_u;
    twice_e_w += std::popcount(g.neighbors(w) & cert.W);
  });
  cert.e_UW = e_uw;
  cert.e_W = twice_e_w / 2;

  const double degree = g.degree(cert.u_star);
  cert.identity1_residual = std::abs(rho - sum_u);
  cert.identity2_residual = std::abs(rho * rho - degree - sum_du_u - sum_du_w);
  cert.identity3_residual =
      std::abs(rho * rho - rho - degree - (sum_du_u - sum_u) - sum_du_w);

  cert.eta1_U = eta1(cert.U, g, pr.x);
  for (std::uint64_t comp : components_within(g, cert.U)) {
    cert.eta1_per_component.push_back(eta1(comp, g, pr.x));
    const int size = std::popcount(comp);
    int twice = 0;
    for_each_vertex(comp, [&](int v) { twice += std::popcount(g.neighbors(v) & comp); });
    const int edges = twice / 2;
    int max_deg = 0;
    for_each_vertex(comp,
                    [&](int v) { max_deg = std::max(max_deg, std::popcount(g.neighbors(v) & comp)); });
    if (size == 1)
      cert.component_classes.push_back(ComponentClass::Isolated);
    else if (size == 3 && edges == 3)
      cert.component_classes.push_back(ComponentClass::Triangle);
    else if (edges == size - 1 && max_deg == size - 1)
      cert.component_classes.push_back(ComponentClass::Star);
    else
      cert.component_classes.push_back(ComponentClass::Other);
  }
  return cert;
}

}  // namespace gemex
