#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gemex/graph.hpp"

namespace gemex {

// Exhaustive isomorph-free generation. by_vertices(n) yields every
// isomorphism class on exactly n vertices passing the filters; by_edges(m)
// yields every connected class with exactly m edges (complete because a
// connected graph with m edges has at most m+1 vertices). The gem_free filter
// prunes during generation (gem-freeness survives vertex deletion), the
// others only gate emission.
struct EnumerationTask {
  enum class Mode { ByVertices, ByEdges };

  static EnumerationTask by_vertices(int n) { return {Mode::ByVertices, n}; }
  static EnumerationTask by_edges(int m) { return {Mode::ByEdges, m}; }

  Mode mode = Mode::ByVertices;
  int limit = 1;  // n for by_vertices (<= 10), m for by_edges (<= 9)
  bool gem_free = false;
  bool connected = false;
  bool no_isolated = false;
  std::optional<int> exact_edges;
};

void enumerate(const EnumerationTask& task, const std::function<void(const Graph&)>& sink);
std::vector<Graph> enumerate_all(const EnumerationTask& task);

enum class Verdict { BoundHolds, Violation, Attained };
const char* to_string(Verdict v);

// One row of a verification run: the edge count under test, the parity bound
// it was compared against, and the best graph seen.
struct RunRecord {
  int m = 0;
  std::string parity;
  double bound_value = 0.0;
  double achieved_max_rho = 0.0;
  std::string maximizer_graph6;
  std::uint64_t num_graphs_scanned = 0;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  Verdict verdict = Verdict::BoundHolds;
};

struct SweepResult {
  std::vector<RunRecord> records;      // one per edge count m >= 11, ascending
  std::vector<std::string> findings;   // even-m exceedances, outside the proven range
  std::uint64_t total_scanned = 0;
};

// Enumerates every gem-free graph without isolated vertices on up to n_max
// vertices and checks each m >= 11 against its parity bound. Odd-m
// exceedances (and even-m ones at m >= 92) become Violation verdicts; even-m
// exceedances below 92 land in `findings`, since no claim covers them.
SweepResult verify_bound_sweep(int n_max, double tol = 1e-9);

struct AnnealConfig {
  int m = 0;
  int restarts = 200;
  int steps = 5000;        // proposals per restart
  double t_start = 0.8;
  double cooling = 0.9975;  // geometric factor per step
  std::uint64_t seed = 1;
  std::string initial_g6;  // optional start state; empty = random per restart
  int threads = 0;         // 0 = flag/env/machine default resolution by caller
  double tol = 1e-9;       // violation slack against the parity bound
};

struct AnnealOutcome {
  RunRecord record;
  Graph best{1};         // best state with isolated pool vertices stripped
  double peak_rho = 0.0;  // largest radius of any scored candidate, any restart
};

// Simulated annealing over gem-free graphs with exactly m edges on a 64
// vertex pool (isolated pool vertices simply aren't part of the state).
// Moves either trade a random edge for a random non-edge or rotate one edge
// onto a vertex with a larger Perron coordinate; Metropolis acceptance on the
// spectral radius with geometric cooling. Restarts use seed + restart index,
// so results are stable under any thread count.
AnnealOutcome anneal_max(const AnnealConfig& config);

struct LemmaSuiteConfig {
  std::uint64_t seed = 12345;
  int rotation_trials = 1000;
  int certificate_trials = 1000;
  int family_m_lo = 13;
  int family_m_hi = 120;
  int family_t_max = 8;
  double residual_tol = 1e-8;
  double family_margin = 1e-10;
};

struct LemmaSuiteReport {
  int rotation_checked = 0;
  int rotation_hypothesis_unmet = 0;  // skipped trials, not failures
  int rotation_failures = 0;
  int certificate_checked = 0;
  int certificate_failures = 0;
  int family_checked = 0;
  int family_failures = 0;
  std::vector<std::string> counterexamples;  // graph6 (or parameters) of each failure

  bool all_passed() const {
    return rotation_failures == 0 && certificate_failures == 0 && family_failures == 0;
  }
};

// Randomized checks of the rotation lemma and the eigenvector identities,
// plus the full family-ordering table; gathers counterexamples instead of
// stopping at the first.
LemmaSuiteReport verify_lemma_suite(const LemmaSuiteConfig& config = {});
LemmaSuiteReport verify_lemma_suite(std::uint64_t seed, int trials);

}  // namespace gemex
