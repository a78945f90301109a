#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gemex/canonical.hpp"
#include "gemex/errors.hpp"
#include "gemex/graph.hpp"
#include "gemex/graph6.hpp"
#include "gemex/search.hpp"
#include "gemex/spectral.hpp"

using namespace gemex;

namespace {

std::vector<std::string> g6_list(const EnumerationTask& task) {
  std::vector<std::string> out;
  enumerate(task, [&](const Graph& g) { out.push_back(to_graph6(g)); });
  return out;
}

// every labeled graph on n vertices, deduplicated by canonical form; the
// slow-but-obvious count the generator has to reproduce
std::size_t labeled_class_count(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::set<std::string> keys;
  for (std::uint64_t pick = 0; pick < (1ull << pairs.size()); ++pick) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pick >> i & 1) edges.push_back(pairs[i]);
    keys.insert(canonical_form(Graph::from_edges(n, edges)));
  }
  return keys.size();
}

double bisect_root(double lo, double hi, const std::function<double(double)>& f) {
  REQUIRE(f(lo) < 0.0);
  REQUIRE(f(hi) > 0.0);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Graph clique_with_pendant() { return complete_graph(4).with_isolated(1).with_edge(0, 4); }

}  // namespace

TEST_CASE("class counts by vertex count match the labeled dedupe oracle") {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n)
    CHECK(enumerate_all(EnumerationTask::by_vertices(n)).size() == expected[n - 1]);
  for (int n = 2; n <= 6; ++n) CHECK(labeled_class_count(n) == expected[n - 1]);
}

TEST_CASE("enumeration order is deterministic") {
  const auto first = g6_list(EnumerationTask::by_vertices(6));
  const auto second = g6_list(EnumerationTask::by_vertices(6));
  CHECK(first == second);
  CHECK(std::set<std::string>(first.begin(), first.end()).size() == first.size());
}

TEST_CASE("edge-mode enumeration is complete") {
  const std::size_t expected[] = {1, 1, 1, 3, 5, 12, 30, 79, 227, 710};
  for (int m = 0; m <= 9; ++m) {
    const auto all = enumerate_all(EnumerationTask::by_edges(m));
    CHECK(all.size() == expected[m]);
    for (const Graph& g : all) {
      CHECK(g.edge_count() == m);
      CHECK(is_connected(g));
    }
  }

  // independent cross-check: the same classes fall out of vertex sweeps
  std::set<std::string> via_edges;
  for (const Graph& g : enumerate_all(EnumerationTask::by_edges(5)))
    via_edges.insert(canonical_form(g));
  std::set<std::string> via_vertices;
  for (int n = 1; n <= 6; ++n) {
    auto task = EnumerationTask::by_vertices(n);
    task.connected = true;
    task.exact_edges = 5;
    for (const Graph& g : enumerate_all(task)) via_vertices.insert(canonical_form(g));
  }
  CHECK(via_edges == via_vertices);
}

TEST_CASE("the seven-edge landscape beats the odd-m reference value") {
  auto task = EnumerationTask::by_edges(7);
  task.gem_free = true;
  const auto classes = enumerate_all(task);
  CHECK(classes.size() == 78);  // of the 79 connected classes, only the gem itself drops

  std::set<std::string> keys;
  double best = 0.0;
  Graph best_g{1};
  for (const Graph& g : classes) {
    keys.insert(canonical_form(g));
    const double rho = perron(g).rho;
    if (rho > best) {
      best = rho;
      best_g = g;
    }
  }
  CHECK(keys.count(canonical_form(complete_split(5, 2))) == 1);

  // the split graph is NOT the seven-edge maximum: a clique with a pendant
  // beats the odd-m formula value, which only claims m >= 11
  CHECK(is_isomorphic(best_g, clique_with_pendant()));
  CHECK(best == doctest::Approx(perron(clique_with_pendant()).rho).epsilon(1e-12));
  CHECK(best > bound_odd(7));
  const double cubic_root =
      bisect_root(3.0, 3.5, [](double z) { return (z * z - 2 * z - 4) * z + 2; });
  CHECK(best == doctest::Approx(cubic_root).epsilon(1e-10));
}

TEST_CASE("nine-vertex sweep holds every covered bound") {
  const SweepResult sweep = verify_bound_sweep(9);
  REQUIRE(sweep.records.size() == 12);  // m = 11..22
  CHECK(sweep.findings.empty());
  CHECK(sweep.total_scanned == 30010);  // all gem-free graphs without isolated vertices

  std::uint64_t scanned = 0;
  for (std::size_t i = 0; i < sweep.records.size(); ++i) {
    const RunRecord& rec = sweep.records[i];
    CHECK(rec.m == 11 + static_cast<int>(i));
    CHECK(rec.parity == (rec.m % 2 ? "odd" : "even"));
    CHECK(rec.verdict == Verdict::BoundHolds);
    CHECK(rec.achieved_max_rho <= rec.bound_value + 1e-9);
    CHECK(!rec.maximizer_graph6.empty());
    scanned += rec.num_graphs_scanned;
  }
  CHECK(scanned == 27176);  // the m >= 11 slice of the scanned population
  CHECK(scanned < sweep.total_scanned);

  const auto& m11 = sweep.records[0];
  CHECK(m11.bound_value == doctest::Approx(bound_odd(11)).epsilon(1e-12));
  CHECK(m11.achieved_max_rho == doctest::Approx(bound_odd(11)).epsilon(1e-9));
  CHECK(canonical_form(from_graph6(m11.maximizer_graph6)) ==
        canonical_form(complete_split(7, 2)));

  const auto& m12 = sweep.records[1];
  CHECK(m12.achieved_max_rho == doctest::Approx(rho_star(12)).epsilon(1e-8));
  CHECK(canonical_form(from_graph6(m12.maximizer_graph6)) ==
        canonical_form(complete_split_minus(8, 1)));

  CHECK(sweep.records[2].achieved_max_rho == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(sweep.records[4].achieved_max_rho == doctest::Approx(bound_odd(15)).epsilon(1e-9));

  // m=17 needs ten vertices for attainment, so the nine-vertex max sits low
  const auto& m17 = sweep.records[6];
  CHECK(m17.achieved_max_rho == doctest::Approx(4.31991748).epsilon(1e-7));
  CHECK(m17.achieved_max_rho < bound_odd(17) - 0.2);

  const SweepResult small = verify_bound_sweep(8);
  CHECK(small.records[0].achieved_max_rho == doctest::Approx(bound_odd(11)).epsilon(1e-9));
  CHECK(small.findings.empty());
}

TEST_CASE("annealing attains the reference points") {
  AnnealConfig cfg;
  cfg.restarts = 20;
  cfg.steps = 2000;
  cfg.seed = 5;
  cfg.threads = 1;

  cfg.m = 2;
  AnnealOutcome two = anneal_max(cfg);
  CHECK(two.record.verdict == Verdict::Attained);
  CHECK(two.record.achieved_max_rho == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(is_isomorphic(two.best, path_graph(3)));

  cfg.m = 11;
  AnnealOutcome odd = anneal_max(cfg);
  CHECK(odd.record.verdict == Verdict::Attained);
  CHECK(odd.record.achieved_max_rho == doctest::Approx(bound_odd(11)).epsilon(1e-9));
  CHECK(is_isomorphic(odd.best, complete_split(7, 2)));
  CHECK(odd.peak_rho <= odd.record.bound_value + 1e-9);

  cfg.m = 12;
  AnnealOutcome even = anneal_max(cfg);
  CHECK(even.record.verdict == Verdict::Attained);
  CHECK(even.record.achieved_max_rho == doctest::Approx(rho_star(12)).epsilon(1e-9));
  CHECK(is_isomorphic(even.best, complete_split_minus(8, 1)));
  CHECK(even.peak_rho <= even.record.bound_value + 1e-9);
}

TEST_CASE("annealing reports the genuine seven-edge exceedance") {
  AnnealConfig cfg;
  cfg.m = 7;
  cfg.restarts = 12;
  cfg.steps = 2000;
  cfg.seed = 5;
  cfg.threads = 1;
  const AnnealOutcome out = anneal_max(cfg);
  CHECK(out.record.verdict == Verdict::Violation);
  CHECK(out.record.bound_value == doctest::Approx(3.0));
  CHECK(out.record.achieved_max_rho ==
        doctest::Approx(perron(clique_with_pendant()).rho).epsilon(1e-9));
  CHECK(is_isomorphic(out.best, clique_with_pendant()));

  // planting the split graph as the start changes nothing: the walk still
  // climbs out and finds the true maximum
  AnnealConfig seeded = cfg;
  seeded.initial_g6 = to_graph6(complete_split(5, 2));
  const AnnealOutcome planted = anneal_max(seeded);
  CHECK(planted.record.verdict == Verdict::Violation);
  CHECK(planted.record.achieved_max_rho ==
        doctest::Approx(perron(clique_with_pendant()).rho).epsilon(1e-9));
}

TEST_CASE("annealing is reproducible") {
  AnnealConfig cfg;
  cfg.m = 23;
  cfg.restarts = 12;
  cfg.steps = 1500;
  cfg.seed = 77;
  cfg.threads = 1;
  const AnnealOutcome a = anneal_max(cfg);
  const AnnealOutcome b = anneal_max(cfg);
  cfg.threads = 3;
  const AnnealOutcome c = anneal_max(cfg);

  for (const AnnealOutcome* other : {&b, &c}) {
    CHECK(a.record.m == other->record.m);
    CHECK(a.record.parity == other->record.parity);
    CHECK(a.record.bound_value == other->record.bound_value);
    CHECK(a.record.achieved_max_rho == other->record.achieved_max_rho);
    CHECK(a.record.maximizer_graph6 == other->record.maximizer_graph6);
    CHECK(a.record.num_graphs_scanned == other->record.num_graphs_scanned);
    CHECK(a.record.seed == other->record.seed);
    CHECK(a.record.verdict == other->record.verdict);
    CHECK(a.peak_rho == other->peak_rho);
  }
}

TEST_CASE("anneal configuration is validated") {
  AnnealConfig cfg;
  cfg.m = 0;
  CHECK_THROWS_AS(anneal_max(cfg), ParameterError);
  cfg.m = 121;
  CHECK_THROWS_AS(anneal_max(cfg), CapacityError);
  cfg.m = 5;
  cfg.restarts = 0;
  CHECK_THROWS_AS(anneal_max(cfg), ParameterError);
  cfg.restarts = 2;
  cfg.steps = -1;
  CHECK_THROWS_AS(anneal_max(cfg), ParameterError);
  cfg.steps = 10;
  cfg.cooling = 0.0;
  CHECK_THROWS_AS(anneal_max(cfg), ParameterError);
  cfg.cooling = 0.99;
  cfg.t_start = 0.0;
  CHECK_THROWS_AS(anneal_max(cfg), ParameterError);
  cfg.t_start = 0.5;
  cfg.initial_g6 = to_graph6(complete_split(5, 2));  // 7 edges, not 5
  CHECK_THROWS_AS(anneal_max(cfg), ParameterError);
  cfg.m = 7;
  cfg.initial_g6 = to_graph6(join(complete_graph(1), path_graph(4)));  // the gem
  CHECK_THROWS_AS(anneal_max(cfg), ParameterError);
}

TEST_CASE("filters carve the expected subfamilies") {
  auto trees = EnumerationTask::by_vertices(5);
  trees.connected = true;
  trees.exact_edges = 4;
  CHECK(enumerate_all(trees).size() == 3);

  auto covered = EnumerationTask::by_vertices(4);
  covered.no_isolated = true;
  CHECK(enumerate_all(covered).size() == 7);

  auto gem_free5 = EnumerationTask::by_vertices(5);
  gem_free5.gem_free = true;
  CHECK(enumerate_all(gem_free5).size() == 29);  // 34 minus the five gem hosts

  auto gf_conn6 = EnumerationTask::by_vertices(6);
  gf_conn6.gem_free = true;
  gf_conn6.connected = true;
  CHECK(enumerate_all(gf_conn6).size() == 68);

  // a gem needs seven edges, so the five-edge stratum is untouched
  auto sparse = EnumerationTask::by_edges(5);
  sparse.gem_free = true;
  CHECK(enumerate_all(sparse).size() == 12);
}

TEST_CASE("enumeration caps and conflicts") {
  CHECK_THROWS_AS(enumerate_all(EnumerationTask::by_vertices(11)), CapacityError);
  CHECK_THROWS_AS(enumerate_all(EnumerationTask::by_vertices(0)), ParameterError);
  CHECK_THROWS_AS(enumerate_all(EnumerationTask::by_edges(10)), CapacityError);
  CHECK_THROWS_AS(enumerate_all(EnumerationTask::by_edges(-1)), ParameterError);
  auto conflicted = EnumerationTask::by_edges(5);
  conflicted.exact_edges = 4;
  CHECK_THROWS_AS(enumerate_all(conflicted), ParameterError);
  CHECK_THROWS_AS(verify_bound_sweep(11), CapacityError);
  CHECK_THROWS_AS(verify_bound_sweep(0), ParameterError);
  CHECK_THROWS_AS(verify_bound_sweep(9, -1.0), ParameterError);
}

TEST_CASE("lemma suite passes at smoke scale") {
  LemmaSuiteConfig cfg;
  cfg.rotation_trials = 60;
  cfg.certificate_trials = 60;
  cfg.family_m_lo = 13;
  cfg.family_m_hi = 40;
  const LemmaSuiteReport report = verify_lemma_suite(cfg);
  CHECK(report.all_passed());
  CHECK(report.counterexamples.empty());
  CHECK(report.rotation_checked + report.rotation_hypothesis_unmet == 60);
  CHECK(report.rotation_checked > 0);
  CHECK(report.certificate_checked == 60);
  CHECK(report.family_checked > 0);

  const LemmaSuiteReport brief = verify_lemma_suite(99, 25);
  CHECK(brief.all_passed());

  LemmaSuiteConfig bad;
  bad.rotation_trials = -1;
  CHECK_THROWS_AS(verify_lemma_suite(bad), ParameterError);
  bad = LemmaSuiteConfig{};
  bad.residual_tol = 0.0;
  CHECK_THROWS_AS(verify_lemma_suite(bad), ParameterError);
}
