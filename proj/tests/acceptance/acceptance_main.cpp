// Acceptance gate for the ETMOF suite. Each criterion prints one PASS/FAIL
// line; the process exits nonzero if any criterion fails. Tolerances are
// pinned here, not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "etmof/campaign.hpp"
#include "etmof/dynamics.hpp"
#include "etmof/io.hpp"
#include "etmof/metrics.hpp"
#include "etmof/optimizer.hpp"
#include "etmof/rng.hpp"
#include "etmof/suite.hpp"

#include "../support/optimum.hpp"

using namespace etmof;
namespace fs = std::filesystem;

namespace {

struct Gate {
  int failures = 0;

  void run(const std::string& name, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty()) {
      std::printf("[PASS] %s (%.1fs)\n", name.c_str(), secs);
    } else {
      std::printf("[FAIL] %s (%.1fs): %s\n", name.c_str(), secs, error.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
};

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// --- criterion 1 ----------------------------------------------------------

void catalog_fidelity() {
  std::ifstream golden(std::string(ETMOF_TEST_DATA_DIR) + "/catalog_golden.txt");
  require(golden.good(), "golden catalog file missing");
  std::vector<std::string> expected;
  std::string line;
  while (std::getline(golden, line)) {
    if (!line.empty() && line[0] != '#') expected.push_back(line);
  }
  std::istringstream actual(catalog_text());
  std::vector<std::string> projected;
  int instance_rows = 0;
  while (std::getline(actual, line)) {
    std::istringstream row(line);
    std::vector<std::string> f;
    std::string tok;
    while (row >> tok) f.push_back(tok);
    if (f.size() == 3 && f[0].rfind("ETMOF", 0) == 0) ++instance_rows;
    if (f.size() == 10 && f[1][0] == 'T') {
      projected.push_back(f[0] + " " + f[1] + " " + f[2] + " " + f[3] + " " + f[4] +
                          " " + f[6] + " " + f[7]);
    }
  }
  require(instance_rows == 40, "expected 40 instance rows");
  require(projected.size() == expected.size(),
          "task row count mismatch: " + std::to_string(projected.size()) + " vs " +
              std::to_string(expected.size()));
  for (std::size_t i = 0; i < expected.size(); ++i) {
    require(projected[i] == expected[i],
            "catalog diff at row " + std::to_string(i) + ": '" + projected[i] +
                "' vs golden '" + expected[i] + "'");
  }
}

// --- criterion 2 ----------------------------------------------------------

void optimum_consistency() {
  SplitMix64 rng(20210917);
  int tasks_checked = 0;
  for (int id = 1; id <= 32; ++id) {
    const MultiTaskProblem problem = instantiate(id);
    for (int k = 1; k <= problem.task_count(); ++k) {
      const TaskSpec& task = problem.task(k);
      ++tasks_checked;
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> xp(static_cast<std::size_t>(task.K));
        for (double& v : xp) v = rng.next_in(-1.0, 1.0);
        const std::vector<double> x = testsupport::optimum_solution(task, xp);

        GTerms terms;
        const Objectives f = evaluate_objectives(task.model, task.plan, task.shape,
                                                 task.assignment, task.lower, task.upper,
                                                 x, &terms);
        for (const double g : terms.raw) {
          require(std::fabs(g) <= 1e-6, "ETMOF" + std::to_string(id) + " T" +
                                            std::to_string(k) + ": |g| = " +
                                            std::to_string(std::fabs(g)));
        }
        const std::vector<double> y = aggregate_positions(task.plan, x);
        const std::vector<double> h =
            shape_needs_g(task.shape) ? eval_shape(task.shape, y, task.m, 0.0)
                                      : eval_shape(task.shape, y, task.m);
        for (int c = 0; c < task.m; ++c) {
          require(std::fabs(f[c] - h[c]) <= 1e-6,
                  "ETMOF" + std::to_string(id) + " T" + std::to_string(k) +
                      ": objective deviates from the bare shape by " +
                      std::to_string(std::fabs(f[c] - h[c])));
        }
      }
    }
  }
  require(tasks_checked >= 180, "expected at least 180 static tasks");
}

// --- criterion 3 ----------------------------------------------------------

void basic_and_linkage_oracle() {
  for (int b = 1; b <= kBasicFnCount; ++b) {
    const BasicFn fn = basic_fn_from_ordinal(b);
    const std::vector<double> xstar(10, basic_fn_minimizer(fn));
    const double tol = fn == BasicFn::ModSchwefel ? 1e-4 : 1e-9;
    const double v = eval_basic(fn, xstar);
    require(std::fabs(v) <= tol,
            std::string(basic_fn_tag(fn)) + " minimum off by " + std::to_string(v));
  }
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 10 + static_cast<int>(rng.next_below(60));
    std::vector<int> idx;
    for (int at = 2 + static_cast<int>(rng.next_below(3));
         at <= n && idx.size() < 12; at += 1 + static_cast<int>(rng.next_below(3))) {
      idx.push_back(at);
    }
    const double y1 = rng.next_double();
    const double y2 = rng.next_double();
    for (int l = 1; l <= 8; ++l) {
      const LinkageFn fn = static_cast<LinkageFn>(l);
      std::vector<double> values;
      for (const int i : idx) values.push_back(linkage_target(fn, i, n, y1, y2));
      const IndexedSlice slice{values, idx, n};
      const double v = fn == LinkageFn::L6 ? eval_linkage(fn, slice, y1, y2)
                                           : eval_linkage(fn, slice, y1);
      require(std::fabs(v) <= 1e-9,
              std::string(linkage_fn_tag(fn)) + " target residual " + std::to_string(v));
    }
  }
}

// --- criterion 4 ----------------------------------------------------------

void shape_identities() {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 3 + static_cast<int>(rng.next_below(8));
    std::vector<double> y(static_cast<std::size_t>(m - 1));
    for (double& v : y) v = rng.next_double();

    const auto h5 = eval_shape(Shape::H5, y, m);
    const auto h6 = eval_shape(Shape::H6, y, m);
    const auto h7 = eval_shape(Shape::H7, y, m);
    const auto h9 = eval_shape(Shape::H9, y, m);
    const auto h3 = eval_shape(Shape::H3, y, m);

    double n5 = 0.0, n9 = 0.0, s3 = 0.0;
    for (int k = 0; k < m; ++k) {
      n5 += h5[k] * h5[k];
      n9 += h9[k] * h9[k];
      s3 += h3[k];
      require(std::fabs(h6[k] - (1.0 - h5[k])) <= 1e-9, "H6 != 1 - H5");
      if (k < m - 1) {
        require(std::fabs(h7[k] - std::pow(h5[k], 4.0)) <= 1e-9, "H7 != H5^4");
      }
    }
    require(std::fabs(h7[m - 1] - h5[m - 1] * h5[m - 1]) <= 1e-9, "H7_m != H5_m^2");
    require(std::fabs(std::sqrt(n5) - 1.0) <= 1e-9, "H5 norm");
    require(std::fabs(std::sqrt(n9) - 1.0) <= 1e-9, "H9 norm");
    require(std::fabs(s3 - 1.0) <= 1e-9, "H3 sum");
  }
}

// --- criterion 5 ----------------------------------------------------------

void metric_identities() {
  const ReferenceFront f = sample_reference_front(Shape::H1, 2, 400);
  require(igd(f.points, f) == 0.0, "igd(S*, S*) != 0");

  const ReferenceFront two =
      make_reference_front({{0.0, 1.0}, {1.0, 0.0}}, std::nullopt, 2);
  require(igd({{0.0, 1.0}}, two) == 1.0, "two-point example != 1.0");

  // Identical values everywhere: every task's sigma is zero, so the guard
  // zeroes each contribution and the scores are exactly zero.
  const std::vector<std::vector<std::vector<double>>> same = {
      {{0.4, 1.5}, {0.4, 1.5}}, {{0.4, 1.5}, {0.4, 1.5}}};
  for (const auto& runs : mean_standard_scores(same)) {
    for (const double s : runs) require(s == 0.0, "identical optimizers must score 0");
  }

  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t runs = 1 + rng.next_below(4);
    const std::size_t tasks = 1 + rng.next_below(6);
    std::vector<std::vector<std::vector<double>>> v(
        2, std::vector<std::vector<double>>(runs, std::vector<double>(tasks)));
    for (std::size_t r = 0; r < runs; ++r) {
      for (std::size_t i = 0; i < tasks; ++i) {
        v[0][r][i] = rng.next_double();
        v[1][r][i] = v[0][r][i] + rng.next_double();
      }
    }
    const auto scores = mean_standard_scores(v);
    for (std::size_t r = 0; r < runs; ++r) {
      require(scores[0][r] <= scores[1][r] + 1e-12, "mss ranking consistency");
    }
  }
}

// --- criterion 6 ----------------------------------------------------------

void dynamic_protocol() {
  const MultiTaskProblem problem = instantiate(39);
  SolverConfig cfg;
  cfg.seed = 17;
  const std::int64_t budget = default_budget(problem, cfg); // 150 * 31 * 20
  require(budget == 93000, "dynamic protocol budget");
  const RunRecord rec = run_solver(problem, cfg, SolverMode::Transfer);
  require(rec.changes == 30,
          "expected exactly 30 change events, saw " + std::to_string(rec.changes));
  ReferenceFrontCache cache;
  for (int k = 1; k <= problem.task_count(); ++k) {
    const auto& result = rec.tasks[static_cast<std::size_t>(k - 1)];
    require(result.evaluations == budget, "dynamic budget not spent exactly");
    require(result.change_fronts.size() == 30, "expected a 30-entry change series");
    std::vector<double> series;
    for (std::size_t c = 0; c < 30; ++c) {
      series.push_back(igd(result.change_fronts[c],
                           cache.front_for(problem.task(k), static_cast<int>(c))));
    }
    const double m = migd(series, 30);
    require(std::isfinite(m), "MIGD must be finite");
  }

  // Piecewise constancy in tau within one window.
  const TaskSpec& task = problem.task(1);
  std::vector<double> x(50, 0.25);
  const DynamicsSpec& spec = *task.dynamics;
  for (const long base : {0L, 200L, 600L}) {
    const Objectives ref = evaluate_dynamic(task, x, time_instant(base, spec).t);
    for (long tau = base; tau < base + spec.frequency; ++tau) {
      require(evaluate_dynamic(task, x, time_instant(tau, spec).t) == ref,
              "objectives changed inside a window");
    }
  }
}

// --- criterion 7 ----------------------------------------------------------

void desk_scale_sanity() {
  for (const int id : {1, 7}) {
    const MultiTaskProblem problem = instantiate(id);
    const int tasks = problem.task_count();
    std::vector<ReferenceFront> refs;
    for (int k = 1; k <= tasks; ++k) {
      const TaskSpec& t = problem.task(k);
      refs.push_back(sample_reference_front(t.shape, t.m, default_front_size(t.m)));
    }
    std::vector<std::vector<double>> transfer(tasks), independent(tasks), random(tasks);
    for (int seed = 1; seed <= 5; ++seed) {
      SolverConfig cfg;
      cfg.seed = static_cast<std::uint64_t>(seed);
      cfg.budget_per_task = 20000;
      const RunRecord tr = run_solver(instantiate(id), cfg, SolverMode::Transfer);
      const RunRecord in = run_solver(instantiate(id), cfg, SolverMode::Independent);
      const auto rnd = random_sampling_fronts(
          instantiate(id), static_cast<std::uint64_t>(seed), 20000, 1000);
      for (int k = 0; k < tasks; ++k) {
        transfer[k].push_back(igd(tr.tasks[k].final_front, refs[k]));
        independent[k].push_back(igd(in.tasks[k].final_front, refs[k]));
        random[k].push_back(igd(rnd[k], refs[k]));
      }
    }
    for (int k = 0; k < tasks; ++k) {
      const double mt = median(transfer[k]);
      const double mi = median(independent[k]);
      const double mr = median(random[k]);
      require(mt <= mr, "ETMOF" + std::to_string(id) + " T" + std::to_string(k + 1) +
                            ": transfer median " + std::to_string(mt) +
                            " worse than random " + std::to_string(mr));
      require(mt <= 1.05 * mi, "ETMOF" + std::to_string(id) + " T" +
                                   std::to_string(k + 1) + ": transfer median " +
                                   std::to_string(mt) + " > 1.05x independent " +
                                   std::to_string(mi));
    }
  }
}

// --- criterion 8 ----------------------------------------------------------

void determinism() {
  SolverConfig cfg;
  cfg.population = 20;
  cfg.seed = 4040;
  cfg.budget_per_task = 2000;
  const fs::path tmp = fs::temp_directory_path() / "etmof_acceptance_det";
  fs::remove_all(tmp);

  for (const std::string tag : {"a", "b"}) {
    const MultiTaskProblem problem = instantiate(1);
    const RunRecord rec = run_solver(problem, cfg, SolverMode::Transfer);
    write_run_record(tmp / tag, rec, "det", 0, problem);
  }
  for (const auto& entry : fs::recursive_directory_iterator(tmp / "a")) {
    if (!entry.is_regular_file()) continue;
    const fs::path rel = fs::relative(entry.path(), tmp / "a");
    std::ifstream fa(entry.path(), std::ios::binary);
    std::ifstream fb(tmp / "b" / rel, std::ios::binary);
    std::ostringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    require(sa.str() == sb.str(), "run files differ: " + rel.string());
  }

  CampaignConfig cc;
  cc.master_seed = 99;
  cc.runs = 2;
  cc.workers = 2;
  cc.budget_override = 1200;
  cc.instances = {1};
  OptimizerSpec a;
  a.name = "mfea";
  a.config.population = 12;
  OptimizerSpec b;
  b.name = "ctrl";
  b.mode = SolverMode::Independent;
  b.config.population = 12;
  cc.optimizers = {a, b};

  std::string first;
  for (const std::string tag : {"c1", "c2"}) {
    cc.output = tmp / tag;
    run_campaign(cc, false);
    std::ifstream in(cc.output / "metrics.csv");
    std::ostringstream os;
    os << in.rdbuf();
    if (first.empty()) {
      first = os.str();
      require(!first.empty(), "empty metrics.csv");
    } else {
      require(os.str() == first, "campaign CSVs differ between identical reruns");
    }
  }
  fs::remove_all(tmp);
}

// --- criterion 9 ----------------------------------------------------------

void large_scale_smoke() {
  const auto start = std::chrono::steady_clock::now();
  const MultiTaskProblem problem = instantiate(24);
  SolverConfig cfg;
  cfg.population = 100;
  cfg.seed = 3;
  cfg.budget_per_task = 200; // initial population plus one offspring generation
  const RunRecord rec = run_solver(problem, cfg, SolverMode::Independent);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(rec.tasks[1].evaluations == 200, "unexpected evaluation count");
  require(problem.task(2).n == 10000, "instance layout");
  require(secs < 10.0,
          "one generation at n = 10000 took " + std::to_string(secs) + "s (>= 10s)");
}

} // namespace

int main() {
  Gate gate;
  gate.run("1 catalog fidelity (40 instances, golden diff)", catalog_fidelity);
  gate.run("2 optimum consistency (static tasks, g <= 1e-6)", optimum_consistency);
  gate.run("3 basic/linkage function oracle", basic_and_linkage_oracle);
  gate.run("4 shape identities (1000 samples, 1e-9)", shape_identities);
  gate.run("5 metric identities and MSS consistency", metric_identities);
  gate.run("6 dynamic protocol (30 changes, MIGD series)", dynamic_protocol);
  gate.run("7 desk-scale optimization sanity", desk_scale_sanity);
  gate.run("8 determinism (runs and campaigns)", determinism);
  gate.run("9 large-scale smoke (n = 10000 generation)", large_scale_smoke);
  if (gate.failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", gate.failures);
  return 1;
}
