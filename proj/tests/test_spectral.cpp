#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "gemex/errors.hpp"
#include "gemex/graph.hpp"
#include "gemex/spectral.hpp"

using namespace gemex;

namespace {

Graph random_graph(std::mt19937_64& eng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<double>(eng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_connected(std::mt19937_64& eng, int n, double p) {
  Graph g = random_graph(eng, n, p);
  while (!is_connected(g)) {
    const auto comps = components(g);
    const int a = std::countr_zero(comps[0]);
    const int b = std::countr_zero(comps[1]);
    g = g.with_edge(a, b);
  }
  return g;
}

// independent root finder: plain bisection on a sign change
double bisect_root(double lo, double hi, const std::function<double(double)>& f) {
  REQUIRE(f(lo) < 0.0);
  REQUIRE(f(hi) > 0.0);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double eigen_rho(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g));
  return solver.eigenvalues().maxCoeff();
}

}  // namespace

TEST_CASE("perron on regular graphs") {
  for (int n = 2; n <= 12; ++n) {
    const PerronResult pr = perron(complete_graph(n));
    CHECK(pr.rho == doctest::Approx(n - 1).epsilon(1e-12));
    for (int v = 0; v < n; ++v) CHECK(pr.x[v] == doctest::Approx(1.0).epsilon(1e-12));
  }
  for (int n = 3; n <= 12; ++n)
    CHECK(perron(cycle_graph(n)).rho == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("perron on P_4 matches the characteristic polynomial root") {
  const double expected =
      bisect_root(1.5, 1.7, [](double x) { return ((x * x - 3) * x * x) + 1; });
  CHECK(perron(path_graph(4)).rho == doctest::Approx(expected).epsilon(1e-11));
  CHECK(expected == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
}

TEST_CASE("perron agrees with a dense eigensolver") {
  std::mt19937_64 eng(211);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(eng() % 19);
    const Graph g = random_connected(eng, n, 0.3);
    CHECK(perron(g).rho == doctest::Approx(eigen_rho(g)).epsilon(1e-10));
  }
}

TEST_CASE("perron residuals stay below 1e-8 on 1000 random connected graphs") {
  std::mt19937_64 eng(223);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(eng() % 19);
    const Graph g = random_connected(eng, n, 0.3);
    const PerronResult pr = perron(g, 1e-12);
    CHECK(pr.residual < 1e-8);
    CHECK(pr.x.maxCoeff() == 1.0);
  }
}

TEST_CASE("perron handles disconnected graphs per component") {
  const Graph g = disjoint_union(complete_graph(3), complete_graph(5));
  const PerronResult pr = perron(g);
  CHECK(pr.rho == doctest::Approx(4.0).epsilon(1e-12));
  for (int v = 0; v < 3; ++v) CHECK(pr.x[v] == 0.0);  // losing component zeroed
  for (int v = 3; v < 8; ++v) CHECK(pr.x[v] == doctest::Approx(1.0).epsilon(1e-12));

  const Graph h = disjoint_union(cycle_graph(4), complete_graph(2));
  const PerronResult ph = perron(h);
  CHECK(ph.rho == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ph.x[5] == 0.0);

  CHECK(perron(Graph(3)).rho == 0.0);  // no edges at all
}

TEST_CASE("perron reports non-convergence") {
  CHECK_THROWS_AS(perron(path_graph(3), 1e-12, 1), ConvergenceError);
  try {
    perron(path_graph(3), 1e-12, 1);
  } catch (const ConvergenceError& e) {
    CHECK(e.residual() > 0.0);
  }
}

TEST_CASE("split family radii have the closed form") {
  for (int p = 1; p <= 30; ++p) {
    const Graph g = join(complete_graph(2), Graph(p));
    const double expected = (1.0 + std::sqrt(1.0 + 8.0 * p)) / 2.0;
    CHECK(perron(g).rho == doctest::Approx(expected).epsilon(1e-9));
    const int m = 2 * p + 1;
    CHECK(bound_odd(m) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("closed-form bounds") {
  CHECK(bound_odd(11) == doctest::Approx(3.7015621187).epsilon(1e-9));
  CHECK(bound_odd(1) == 1.0);
  CHECK(bound_odd(93) == doctest::Approx((1 + std::sqrt(369.0)) / 2).epsilon(1e-12));
  CHECK(bound_odd(93) == doctest::Approx(10.1046864).epsilon(1e-7));
  CHECK_THROWS_AS(bound_odd(0), ParameterError);

  CHECK(threshold_lower(92) == doctest::Approx(10.0263).epsilon(1e-4));
  CHECK(threshold_lower(3) == doctest::Approx((1 + std::sqrt(7.0)) / 2).epsilon(1e-12));
  CHECK(threshold_lower(11) < bound_odd(11));
  CHECK_THROWS_AS(threshold_lower(1), ParameterError);
}

TEST_CASE("rho_star matches an independent bisection oracle at m=12") {
  const auto quartic = [](double x) { return ((x * x - 12) * x - 10) * x + 5; };
  CHECK(quartic(3.78) < 0.0);
  CHECK(quartic(3.785) > 0.0);
  const double expected = bisect_root(3.78, 3.785, quartic);
  CHECK(rho_star(12) == doctest::Approx(expected).epsilon(1e-10));
  CHECK(rho_star(12) == doctest::Approx(3.7810).epsilon(1e-4));
}

TEST_CASE("rho_star stays inside its bracket for even m up to 200") {
  for (int m = 12; m <= 200; m += 2) {
    const double r = rho_star(m);
    CHECK(r > threshold_lower(m));
    CHECK(r < (1.0 + std::sqrt(4.0 * m + 1.0)) / 2.0);
  }
  CHECK(rho_star(92) > 10.0263);
  CHECK(rho_star(92) < 10.1076);
}

TEST_CASE("rho_star equals the deficient split graph's radius") {
  for (int m = 12; m <= 120; m += 2) {
    const Graph g = complete_split_minus((m + 4) / 2, 1);
    REQUIRE(g.edge_count() == m);
    CHECK(perron(g).rho == doctest::Approx(rho_star(m)).epsilon(1e-8));
  }
  CHECK_THROWS_AS(rho_star(11), ParameterError);
  CHECK_THROWS_AS(rho_star(0), ParameterError);
}

TEST_CASE("divisor-matrix radii match power iteration") {
  for (const int n : {5, 8, 12, 20, 40, 64})
    for (int t = 0; t <= std::min(6, n - 2); ++t) {
      const double direct = perron(complete_split_minus(n, t)).rho;
      CHECK(split_minus_rho(n, t) == doctest::Approx(direct).epsilon(1e-10));
    }
  CHECK_THROWS_AS(split_minus_rho(10, 9), ParameterError);
  // the quotient keeps working where the 64-vertex graph cap stops
  CHECK(split_minus_rho(80, 3) > split_minus_rho(80, 4));
}

TEST_CASE("edge additions strictly raise the radius") {
  std::mt19937_64 eng(227);
  int exercised = 0;
  while (exercised < 200) {
    const int n = 4 + static_cast<int>(eng() % 12);
    const Graph g = random_connected(eng, n, 0.4);
    const int u = static_cast<int>(eng() % static_cast<std::uint64_t>(n));
    const int v = static_cast<int>(eng() % static_cast<std::uint64_t>(n));
    if (u == v || g.has_edge(u, v)) continue;
    CHECK(perron(g.with_edge(u, v)).rho - perron(g).rho > 1e-10);
    ++exercised;
  }
}

TEST_CASE("eta1 worked examples") {
  const Graph triangle = complete_graph(3);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(3);
  CHECK(eta1(triangle.vertex_mask(), triangle, ones) == doctest::Approx(0.0));

  const Graph star = star_graph(6);
  Eigen::VectorXd star_ones = Eigen::VectorXd::Ones(6);
  CHECK(eta1(star.vertex_mask(), star, star_ones) == doctest::Approx(-1.0));

  Eigen::VectorXd half = Eigen::VectorXd::Constant(1, 0.5);
  CHECK(eta1(1ull, Graph(1), half) == doctest::Approx(-0.5));

  CHECK(eta1(0ull, triangle, ones) == 0.0);
}

TEST_CASE("certificate on the odd extremal graph") {
  const Graph g = complete_split(7, 2);
  const PerronResult pr = perron(g);
  const SpectralCertificate cert = certificate(g, pr);
  CHECK(cert.u_star == 0);
  CHECK(cert.U == g.neighbors(0));
  CHECK(cert.W == 0);
  CHECK(cert.e_W == 0);
  CHECK(cert.e_UW == 0);
  REQUIRE(cert.component_classes.size() == 1);
  CHECK(cert.component_classes[0] == ComponentClass::Star);  // G[U] is K_{1,5}
  CHECK(cert.eta1_U <= -1.0);
  CHECK(cert.identity1_residual < 1e-10);
  CHECK(cert.identity2_residual < 1e-9);
  CHECK(cert.identity3_residual < 1e-9);
}

TEST_CASE("certificate with an all-isolated neighborhood") {
  const Graph g = star_graph(6);  // u* is the center
  const PerronResult pr = perron(g);
  const SpectralCertificate cert = certificate(g, pr);
  CHECK(cert.u_star == 0);
  REQUIRE(cert.component_classes.size() == 5);
  double coord_sum = 0.0;
  for (int v = 1; v < 6; ++v) coord_sum += pr.x[v];
  for (const ComponentClass c : cert.component_classes) CHECK(c == ComponentClass::Isolated);
  CHECK(cert.eta1_U == doctest::Approx(-coord_sum).epsilon(1e-12));
  CHECK(cert.eta1_U < 0.0);
}

TEST_CASE("certificate classifies triangles and rejects disconnected input") {
  // wheel-like: hub 0 over a triangle and a 4-path
  const Graph g = join(complete_graph(1),
                       disjoint_union(complete_graph(3), path_graph(4)));
  const PerronResult pr = perron(g);
  const SpectralCertificate cert = certificate(g, pr);
  CHECK(cert.u_star == 0);
  REQUIRE(cert.component_classes.size() == 2);
  CHECK(cert.component_classes[0] == ComponentClass::Triangle);
  CHECK(cert.component_classes[1] == ComponentClass::Other);  // P_4 is neither star nor triangle
  CHECK(cert.eta1_per_component.size() == 2);

  CHECK_THROWS_AS(certificate(disjoint_union(complete_graph(3), complete_graph(2)),
                              perron(disjoint_union(complete_graph(3), complete_graph(2)))),
                  StructuralError);
}

TEST_CASE("identity residuals under 1e-8 on 1000 random connected graphs") {
  std::mt19937_64 eng(229);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(eng() % 19);
    const Graph g = random_connected(eng, n, 0.3);
    const SpectralCertificate cert = certificate(g, perron(g));
    CHECK(cert.identity1_residual < 1e-8);
    CHECK(cert.identity2_residual < 1e-8);
    CHECK(cert.identity3_residual < 1e-8);
  }
}
