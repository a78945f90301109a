#include "gemex/cli.hpp"

#include <bit>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gemex/canonical.hpp"
#include "gemex/errors.hpp"
#include "gemex/graph.hpp"
#include "gemex/graph6.hpp"
#include "gemex/patterns.hpp"
#include "gemex/search.hpp"
#include "gemex/spectral.hpp"
#include "gemex/transforms.hpp"

namespace gemex {

namespace {

constexpr int kSchemaVersion = 1;

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("GEMEX_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// A violation only counts against the exit code when the claim actually
// covers that edge count: odd m from 11 up, even m from 92 up. Everything
// else is reported as a finding.
bool covered_violation(const RunRecord& r) {
  return r.verdict == Verdict::Violation && (r.m % 2 ? r.m >= 11 : r.m >= 92);
}

void append_records(const std::string& path, const std::string& command,
                    std::span<const RunRecord> records) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out) throw ParameterError("cannot open records file: " + path);
  for (const RunRecord& r : records) {
    nlohmann::ordered_json line;
    line["schema_version"] = kSchemaVersion;
    line["command"] = command;
    line["m"] = r.m;
    line["parity"] = r.parity;
    line["bound"] = r.bound_value;
    line["max_rho"] = r.achieved_max_rho;
    line["maximizer_g6"] = r.maximizer_graph6;
    line["scanned"] = r.num_graphs_scanned;
    line["seed"] = r.seed;
    line["elapsed_ms"] = r.elapsed_ms;
    line["verdict"] = to_string(r.verdict);
    out << line.dump() << '\n';
  }
}

std::uint64_t mask_of(const std::vector<int>& vertices) {
  std::uint64_t mask = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw ParameterError("vertex index out of range");
    mask |= 1ull << v;
  }
  return mask;
}

// Recover the surgery decomposition from a hub choice: the star center is
// the neighbor with the most neighbors inside N(hub), least index on ties.
// w_eliminate re-validates everything, so a bad guess fails loudly there.
SurgeryPlan infer_plan(const Graph& g, int hub) {
  if (hub < 0 || hub >= g.vertex_count()) throw ParameterError("hub index out of range");
  const std::uint64_t u_set = g.neighbors(hub);
  int center = -1;
  int center_deg = -1;
  for_each_vertex(u_set, [&](int v) {
    const int d = std::popcount(g.neighbors(v) & u_set);
    if (d > center_deg) {
      center_deg = d;
      center = v;
    }
  });
  if (center < 0) throw StructuralError("hub has no neighbors, nothing to rebuild");
  SurgeryPlan plan;
  plan.u_star = hub;
  plan.v = center;
  plan.leaves = g.neighbors(center) & u_set;
  plan.isolated = u_set & ~plan.leaves & ~(1ull << center);
  plan.w = g.vertex_mask() & ~u_set & ~(1ull << hub);
  return plan;
}

struct Flags {
  // construct
  std::string family;
  int n = 0;
  int k = 2;
  int t = 0;
  // graph input
  std::string g6;
  // spectral
  double tol = 1e-12;
  int max_iter = 200000;
  bool want_certificate = false;
  // rotate
  int u = 0;
  int v = 0;
  std::vector<int> moved;
  // surgery
  int hub = 0;
  // compare
  int m = 0;
  int t_max = 8;
  std::string csv;
  // enumerate
  bool gem_free = false;
  bool connected = false;
  bool no_isolated = false;
  int exact_edges = -1;
  bool print_each = false;
  // sweep / anneal / lemmas
  int n_max = 0;
  double sweep_tol = 1e-9;
  std::string records = "records.jsonl";
  int restarts = 200;
  int steps = 5000;
  double t_start = 0.8;
  double cooling = 0.9975;
  std::uint64_t seed = 1;
  std::string start_g6;
  int threads = 0;
  std::uint64_t lemma_seed = 12345;
  int rotation_trials = 1000;
  int certificate_trials = 1000;
  int family_m_lo = 13;
  int family_m_hi = 120;
};

int run_construct(const Flags& f) {
  Graph g{1};
  if (f.family == "split") {
    g = complete_split(f.n, f.k);
  } else if (f.family == "s-minus") {
    g = complete_split_minus(f.n, f.t);
  } else if (f.family == "fan") {
    g = fan_graph(f.t);
  } else if (f.family == "path") {
    g = path_graph(f.n);
  } else if (f.family == "cycle") {
    g = cycle_graph(f.n);
  } else if (f.family == "complete") {
    g = complete_graph(f.n);
  } else if (f.family == "star") {
    g = star_graph(f.n);
  } else {
    throw ParameterError("unknown family: " + f.family);
  }
  std::cout << "graph6: " << to_graph6(g) << '\n';
  std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
  return 0;
}

int run_spectral(const Flags& f) {
  const Graph g = from_graph6(f.g6);
  const PerronResult pr = perron(g, f.tol, f.max_iter);
  std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
  std::cout << std::fixed << std::setprecision(10);
  std::cout << "rho = " << pr.rho << '\n';
  std::cout << "iterations = " << pr.iterations << '\n';
  std::cout << "residual = " << std::scientific << std::setprecision(3) << pr.residual << '\n';
  if (f.want_certificate) {
    const SpectralCertificate cert = certificate(g, pr);
    std::cout << std::fixed << std::setprecision(10);
    std::cout << "u_star = " << cert.u_star << '\n';
    std::cout << "eta1(U) = " << cert.eta1_U << '\n';
    std::cout << "e(W) = " << cert.e_W << "  e(U,W) = " << cert.e_UW << '\n';
    std::cout << "identity residuals = " << std::scientific << std::setprecision(3)
              << cert.identity1_residual << ' ' << cert.identity2_residual << ' '
              << cert.identity3_residual << '\n';
    for (std::size_t i = 0; i < cert.component_classes.size(); ++i)
      std::cout << "U component " << i << ": " << to_string(cert.component_classes[i])
                << "  eta1 = " << std::fixed << std::setprecision(10)
                << cert.eta1_per_component[i] << '\n';
  }
  return 0;
}

int run_gemfree(const Flags& f) {
  const Graph g = from_graph6(f.g6);
  std::cout << "gem-free: " << (is_gem_free(g) ? "yes" : "no") << '\n';
  return 0;
}

int run_rotate(const Flags& f) {
  const Graph g = from_graph6(f.g6);
  const RotationSpec spec{f.u, f.v, mask_of(f.moved)};
  const RotationReport report = check_rotation_lemma(g, spec);
  std::cout << std::fixed << std::setprecision(10);
  std::cout << "hypothesis satisfied: " << (report.hypothesis_satisfied ? "yes" : "no") << '\n';
  std::cout << "x_u = " << report.x_u << "  x_v = " << report.x_v << '\n';
  std::cout << "rho before = " << report.rho_before << '\n';
  std::cout << "rho after  = " << report.rho_after << '\n';
  std::cout << "margin = " << std::scientific << std::setprecision(6) << report.margin << '\n';
  std::cout << "rotated graph6: " << to_graph6(rotate(g, spec)) << '\n';
  return 0;
}

int run_surgery(const Flags& f) {
  const Graph g = from_graph6(f.g6);
  const SurgeryPlan plan = infer_plan(g, f.hub);
  const SurgeryStages stages = w_eliminate_stages(g, plan);
  const double rho_before = perron(g).rho;
  const double rho_after = perron(stages.result).rho;
  const int n_out = stages.result.vertex_count();
  const bool matches = is_isomorphic(stages.result, complete_split_minus(n_out, stages.t));
  std::cout << "w vertices replaced: " << stages.added_per_w.size() << '\n';
  std::cout << "t = " << stages.t << '\n';
  std::cout << "result graph6: " << to_graph6(stages.result) << '\n';
  std::cout << "result n=" << n_out << " m=" << stages.result.edge_count() << '\n';
  std::cout << "split family match: " << (matches ? "yes" : "no") << '\n';
  std::cout << std::fixed << std::setprecision(10);
  std::cout << "rho before = " << rho_before << '\n';
  std::cout << "rho after  = " << rho_after << '\n';
  return 0;
}

int run_compare(const Flags& f) {
  const FamilyComparison comp = compare_families(f.m, f.t_max);
  std::cout << "m=" << comp.m << "  reference t=" << comp.reference_t << '\n';
  std::cout << std::fixed << std::setprecision(10);
  for (const FamilyRow& row : comp.rows)
    std::cout << "t=" << row.t << "  n=" << row.n << "  rho=" << row.rho
              << (row.t == comp.reference_t ? "  (reference)" : "") << '\n';
  std::cout << "min margin = " << std::scientific << std::setprecision(6) << comp.min_margin
            << "  strict: " << (comp.strict ? "yes" : "no") << '\n';
  if (!f.csv.empty()) {
    std::ofstream out(f.csv);
    if (!out) throw ParameterError("cannot open csv file: " + f.csv);
    out << "m,t,n,rho,is_reference,margin\n";
    out << std::setprecision(17);
    for (const FamilyRow& row : comp.rows)
      out << comp.m << ',' << row.t << ',' << row.n << ',' << row.rho << ','
          << (row.t == comp.reference_t ? 1 : 0) << ',' << comp.reference_rho - row.rho << '\n';
  }
  return 0;
}

int run_enumerate(const Flags& f, bool by_vertices) {
  EnumerationTask task =
      by_vertices ? EnumerationTask::by_vertices(f.n) : EnumerationTask::by_edges(f.m);
  task.gem_free = f.gem_free;
  task.connected = f.connected;
  task.no_isolated = f.no_isolated;
  if (f.exact_edges >= 0) task.exact_edges = f.exact_edges;
  std::uint64_t count = 0;
  enumerate(task, [&](const Graph& g) {
    ++count;
    if (f.print_each) std::cout << to_graph6(g) << '\n';
  });
  std::cout << "classes: " << count << '\n';
  return 0;
}

int run_sweep(const Flags& f) {
  const SweepResult result = verify_bound_sweep(f.n_max, f.sweep_tol);
  std::cout << std::fixed << std::setprecision(10);
  bool bad = false;
  for (const RunRecord& r : result.records) {
    std::cout << "m=" << r.m << " (" << r.parity << ")  bound=" << r.bound_value
              << "  max=" << r.achieved_max_rho << "  classes=" << r.num_graphs_scanned
              << "  verdict=" << to_string(r.verdict) << "  maximizer=" << r.maximizer_graph6
              << '\n';
    bad = bad || covered_violation(r);
  }
  for (const std::string& note : result.findings) std::cout << "finding: " << note << '\n';
  std::cout << "scanned " << result.total_scanned << " gem-free classes up to " << f.n_max
            << " vertices; covered violations: " << (bad ? "found" : "none") << '\n';
  append_records(f.records, "sweep", result.records);
  if (!f.csv.empty()) {
    std::ofstream out(f.csv);
    if (!out) throw ParameterError("cannot open csv file: " + f.csv);
    out << "m,parity,bound,max_rho,maximizer_g6,scanned,seed,elapsed_ms,verdict\n";
    out << std::setprecision(17);
    for (const RunRecord& r : result.records)
      out << r.m << ',' << r.parity << ',' << r.bound_value << ',' << r.achieved_max_rho << ','
          << r.maximizer_graph6 << ',' << r.num_graphs_scanned << ',' << r.seed << ','
          << r.elapsed_ms << ',' << to_string(r.verdict) << '\n';
  }
  return bad ? 1 : 0;
}

int run_anneal(const Flags& f) {
  AnnealConfig config;
  config.m = f.m;
  config.restarts = f.restarts;
  config.steps = f.steps;
  config.t_start = f.t_start;
  config.cooling = f.cooling;
  config.seed = f.seed;
  config.initial_g6 = f.start_g6;
  config.threads = resolve_threads(f.threads);
  config.tol = f.sweep_tol;
  const AnnealOutcome outcome = anneal_max(config);
  const RunRecord& r = outcome.record;
  std::cout << std::fixed << std::setprecision(10);
  std::cout << "m=" << r.m << " (" << r.parity << ")  bound=" << r.bound_value << '\n';
  std::cout << "best rho = " << r.achieved_max_rho << "  peak sampled = " << outcome.peak_rho
            << '\n';
  std::cout << "maximizer graph6: " << r.maximizer_graph6 << '\n';
  std::cout << "proposals scored: " << r.num_graphs_scanned << "  verdict: "
            << to_string(r.verdict) << '\n';
  if (r.verdict == Verdict::Violation && !covered_violation(r))
    std::cout << "note: exceedance at m=" << r.m
              << " is outside the covered range, reported as a finding\n";
  append_records(f.records, "anneal", {&r, 1});
  return covered_violation(r) ? 1 : 0;
}

int run_lemmas(const Flags& f) {
  LemmaSuiteConfig config;
  config.seed = f.lemma_seed;
  config.rotation_trials = f.rotation_trials;
  config.certificate_trials = f.certificate_trials;
  config.family_m_lo = f.family_m_lo;
  config.family_m_hi = f.family_m_hi;
  config.family_t_max = f.t_max;
  const LemmaSuiteReport report = verify_lemma_suite(config);
  std::cout << "rotation: " << report.rotation_checked << " checked, "
            << report.rotation_hypothesis_unmet << " skipped, " << report.rotation_failures
            << " failures\n";
  std::cout << "certificates: " << report.certificate_checked << " checked, "
            << report.certificate_failures << " failures\n";
  std::cout << "family rows: " << report.family_checked << " checked, "
            << report.family_failures << " failures\n";
  for (const std::string& c : report.counterexamples) std::cout << "counterexample: " << c << '\n';
  std::cout << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << '\n';
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"gem-free extremal graph toolkit"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* construct = app.add_subcommand("construct", "build a named family member");
  construct->add_option("--family", f.family,
                        "split | s-minus | fan | path | cycle | complete | star")
      ->required();
  construct->add_option("--n", f.n, "vertex count");
  construct->add_option("--k", f.k, "clique size for split")->capture_default_str();
  construct->add_option("--t", f.t, "deficiency for s-minus, order for fan")->capture_default_str();

  CLI::App* spectral = app.add_subcommand("spectral", "Perron radius and certificate");
  spectral->add_option("--g6", f.g6, "graph6 input")->required();
  spectral->add_option("--tol", f.tol, "power-iteration tolerance")->capture_default_str();
  spectral->add_option("--maxiter", f.max_iter, "iteration cap")->capture_default_str();
  spectral->add_flag("--certificate", f.want_certificate, "print the identity certificate");

  CLI::App* gemfree = app.add_subcommand("gemfree", "test a graph for gem subgraphs");
  gemfree->add_option("--g6", f.g6, "graph6 input")->required();

  CLI::App* rot = app.add_subcommand("rotate", "rotate edges and compare radii");
  rot->add_option("--g6", f.g6, "graph6 input")->required();
  rot->add_option("--u", f.u, "vertex gaining the edges")->required();
  rot->add_option("--v", f.v, "vertex losing the edges")->required();
  rot->add_option("--moved", f.moved, "comma-separated neighbors of v to move")
      ->required()
      ->delimiter(',');

  CLI::App* surgery = app.add_subcommand("surgery", "rebuild the outside of a hub neighborhood");
  surgery->add_option("--g6", f.g6, "graph6 input")->required();
  surgery->add_option("--hub", f.hub, "hub vertex")->required();

  CLI::App* compare = app.add_subcommand("compare", "rank same-parity family members");
  compare->add_option("--m", f.m, "edge count")->required();
  compare->add_option("--tmax", f.t_max, "largest deficiency")->capture_default_str();
  compare->add_option("--csv", f.csv, "write rows as csv");

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "list isomorphism classes");
  enumerate_cmd->add_option("--n", f.n, "exact vertex count (up to 10)");
  enumerate_cmd->add_option("--m", f.m, "exact edge count, connected classes (up to 9)");
  enumerate_cmd->add_flag("--gemfree", f.gem_free, "only gem-free classes");
  enumerate_cmd->add_flag("--connected", f.connected, "only connected classes");
  enumerate_cmd->add_flag("--no-isolated", f.no_isolated, "drop classes with isolated vertices");
  enumerate_cmd->add_option("--edges", f.exact_edges, "exact edge filter for --n mode");
  enumerate_cmd->add_flag("--print", f.print_each, "print one graph6 line per class");

  CLI::App* sweep = app.add_subcommand("sweep", "exhaustive bound verification");
  sweep->add_option("--nmax", f.n_max, "largest vertex count (up to 10)")->required();
  sweep->add_option("--tol", f.sweep_tol, "violation slack")->capture_default_str();
  sweep->add_option("--records", f.records, "records file (JSON lines, appended)")->capture_default_str();
  sweep->add_option("--csv", f.csv, "write the per-m table as csv");

  CLI::App* anneal = app.add_subcommand("anneal", "stochastic search for heavy states");
  anneal->add_option("--m", f.m, "edge count (up to 120)")->required();
  anneal->add_option("--restarts", f.restarts, "independent restarts")->capture_default_str();
  anneal->add_option("--steps", f.steps, "proposals per restart")->capture_default_str();
  anneal->add_option("--tstart", f.t_start, "initial temperature")->capture_default_str();
  anneal->add_option("--cooling", f.cooling, "geometric cooling factor")->capture_default_str();
  anneal->add_option("--seed", f.seed, "base seed; restart r uses seed+r")->capture_default_str();
  anneal->add_option("--start", f.start_g6, "graph6 start state (default: random)");
  anneal->add_option("--threads", f.threads, "worker threads (0 = env/machine)")->capture_default_str();
  anneal->add_option("--tol", f.sweep_tol, "violation slack")->capture_default_str();
  anneal->add_option("--records", f.records, "records file (JSON lines, appended)")->capture_default_str();

  CLI::App* lemmas = app.add_subcommand("lemmas", "randomized lemma and identity checks");
  lemmas->add_option("--seed", f.lemma_seed, "rng seed")->capture_default_str();
  lemmas->add_option("--rotation-trials", f.rotation_trials, "rotation trials")->capture_default_str();
  lemmas->add_option("--certificate-trials", f.certificate_trials, "certificate trials")->capture_default_str();
  lemmas->add_option("--m-lo", f.family_m_lo, "family table start")->capture_default_str();
  lemmas->add_option("--m-hi", f.family_m_hi, "family table end")->capture_default_str();
  lemmas->add_option("--tmax", f.t_max, "family table deficiency cap")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*construct) return run_construct(f);
    if (*spectral) return run_spectral(f);
    if (*gemfree) return run_gemfree(f);
    if (*rot) return run_rotate(f);
    if (*surgery) return run_surgery(f);
    if (*compare) return run_compare(f);
    if (*enumerate_cmd) {
      const bool has_n = enumerate_cmd->count("--n") > 0;
      const bool has_m = enumerate_cmd->count("--m") > 0;
      if (has_n == has_m) throw ParameterError("enumerate needs exactly one of --n and --m");
      return run_enumerate(f, has_n);
    }
    if (*sweep) return run_sweep(f);
    if (*anneal) return run_anneal(f);
    if (*lemmas) return run_lemmas(f);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace gemex
