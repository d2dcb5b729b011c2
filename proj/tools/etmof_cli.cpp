#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include "etmof/campaign.hpp"
#include "etmof/dynamics.hpp"
#include "etmof/io.hpp"
#include "etmof/suite.hpp"

namespace {

int cmd_eval(int instance, int task, const std::string& x_file,
             std::optional<double> t) {
  try {
    const etmof::MultiTaskProblem problem = etmof::instantiate(instance);
    const std::vector<double> x = etmof::read_vector_file(x_file);
    const etmof::Objectives f =
        t.has_value() ? problem.evaluate(task, x, *t) : problem.evaluate(task, x);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) std::printf(" ");
      std::printf("%.12g", f[i]);
    }
    std::printf("\n");
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "eval: " << e.what() << "\n";
    return 2;
  }
}

int cmd_reference_front(int instance, int task_filter, int count,
                        const std::string& out) {
  const etmof::MultiTaskProblem problem = etmof::instantiate(instance);
  const std::filesystem::path dir = etmof::resolve_output_path(out);
  for (int k = 1; k <= problem.task_count(); ++k) {
    if (task_filter > 0 && k != task_filter) continue;
    const etmof::TaskSpec& task = problem.task(k);
    const std::string stem = "ETMOF" + std::to_string(instance) + "_T" + std::to_string(k);
    if (task.is_dynamic()) {
      const int tau_t = task.dynamics->frequency;
      for (int c = 0; c <= 30; ++c) {
        const double t = etmof::time_instant(static_cast<long>(c) * tau_t, *task.dynamics).t;
        const etmof::ReferenceFront front = etmof::dynamic_front(
            task, t, count > 0 ? count : etmof::default_front_size(task.m));
        etmof::write_reference_front(dir / (stem + "_t" + std::to_string(c) + ".front"),
                                     front);
      }
      std::cout << stem << ": wrote 31 per-change fronts under " << dir.string() << "\n";
    } else {
      const etmof::ReferenceFront front = etmof::sample_reference_front(
          task.shape, task.m, count > 0 ? count : etmof::default_front_size(task.m));
      etmof::write_reference_front(dir / (stem + ".front"), front);
      std::cout << stem << ": " << front.points.size() << " points -> "
                << (dir / (stem + ".front")).string() << "\n";
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  // Instance construction hangs off the seeded generator; refuse to run on a
  // platform where the stream deviates from the frozen reference vector.
  {
    etmof::SplitMix64 rng(0);
    for (const std::uint64_t expected : etmof::SplitMix64::reference_stream()) {
      if (rng.next_u64() != expected) {
        std::cerr << "generator self-test failed; instances would not be reproducible\n";
        return 1;
      }
    }
  }

  CLI::App app{"ETMOF benchmark suite: 40 multi-task multiobjective test problems, "
               "reference fronts, baseline solvers and the competition protocol"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "Print the 40-instance table");

  auto* eval = app.add_subcommand("eval", "Evaluate one task at a point from a file");
  int ev_instance = 0;
  int ev_task = 1;
  std::string ev_file;
  double ev_t = -1.0;
  bool ev_has_t = false;
  eval->add_option("--instance,-i", ev_instance, "Instance id (1..40)")->required();
  eval->add_option("--task,-k", ev_task, "Task index (1-based)");
  eval->add_option("--x", ev_file, "File of n whitespace-separated reals")->required();
  eval->add_option("--t", ev_t, "Time instant (dynamic tasks only)")
      ->each([&](const std::string&) { ev_has_t = true; });

  auto* ref = app.add_subcommand("reference-front", "Write reference front files");
  int rf_instance = 0;
  int rf_task = 0;
  int rf_count = 0;
  std::string rf_out = "fronts";
  ref->add_option("--instance,-i", rf_instance, "Instance id (1..40)")->required();
  ref->add_option("--task,-k", rf_task, "Only this task (default: all)");
  ref->add_option("--count", rf_count, "Target point count (default per m)");
  ref->add_option("--out,-o", rf_out, "Output directory");

  auto* camp = app.add_subcommand("run-campaign", "Execute a campaign config");
  std::string c_config;
  bool c_force = false;
  std::uint64_t c_seed = 0;
  bool c_has_seed = false;
  int c_runs = 0;
  std::int64_t c_budget = 0;
  camp->add_option("config", c_config, "Campaign config file")->required();
  camp->add_flag("--force", c_force, "Overwrite an existing results tree");
  camp->add_option("--seed", c_seed, "Override the master seed")
      ->each([&](const std::string&) { c_has_seed = true; });
  camp->add_option("--runs", c_runs, "Override the run count");
  camp->add_option("--budget", c_budget, "Override the per-task budget");

  auto* metrics = app.add_subcommand("metrics", "Recompute metrics.csv from a results tree");
  std::string m_root;
  std::string m_out;
  metrics->add_option("root", m_root, "Campaign output root")->required();
  metrics->add_option("--out,-o", m_out, "CSV path (default <root>/metrics.csv)");

  auto* rank = app.add_subcommand("rank", "MSS ranking table from metrics.csv");
  std::string r_metrics;
  std::string r_out;
  rank->add_option("metrics", r_metrics, "metrics.csv path")->required();
  rank->add_option("--out,-o", r_out, "CSV path (default mss.csv next to input)");

  auto* plot = app.add_subcommand("plotdata", "Emit plot files for one run directory");
  std::string p_run;
  std::string p_out = "plots";
  plot->add_option("run", p_run, "Run directory (.../ETMOF<i>/<optimizer>/<seed>)")
      ->required();
  plot->add_option("--out,-o", p_out, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (catalog->parsed()) {
      std::cout << etmof::catalog_text();
      return 0;
    }
    if (eval->parsed()) {
      return cmd_eval(ev_instance, ev_task, ev_file,
                      ev_has_t ? std::optional<double>(ev_t) : std::nullopt);
    }
    if (ref->parsed()) {
      return cmd_reference_front(rf_instance, rf_task, rf_count, rf_out);
    }
    if (camp->parsed()) {
      etmof::CampaignConfig cfg = etmof::load_campaign_config(c_config);
      if (c_has_seed) cfg.master_seed = c_seed;
      if (c_runs > 0) cfg.runs = c_runs;
      if (c_budget > 0) cfg.budget_override = c_budget;
      try {
        const etmof::CampaignResult res = etmof::run_campaign(cfg, c_force);
        std::cout << "campaign finished under " << res.root.string() << " ("
                  << res.metrics.size() << " metric rows, " << res.failed_cells
                  << " failed cells)\n";
        return res.failed_cells == 0 ? 0 : 1;
      } catch (const etmof::CampaignExistsError& e) {
        std::cerr << e.what() << "\n";
        return 3;
      }
    }
    if (metrics->parsed()) {
      const std::filesystem::path root = etmof::resolve_output_path(m_root);
      const auto rows = etmof::compute_metrics_from_tree(root);
      const std::filesystem::path out =
          m_out.empty() ? root / "metrics.csv" : std::filesystem::path(m_out);
      etmof::write_metrics_csv(out, rows);
      std::cout << rows.size() << " metric rows -> " << out.string() << "\n";
      return 0;
    }
    if (rank->parsed()) {
      const auto rows = etmof::read_metrics_csv(r_metrics);
      const auto mss = etmof::mss_from_metrics(rows);
      const std::filesystem::path out =
          r_out.empty() ? std::filesystem::path(r_metrics).parent_path() / "mss.csv"
                        : std::filesystem::path(r_out);
      etmof::write_mss_csv(out, mss);
      std::cout << mss.size() << " mss rows -> " << out.string() << "\n";
      return 0;
    }
    if (plot->parsed()) {
      etmof::emit_plot_data(p_run, etmof::resolve_output_path(p_out));
      std::cout << "plot data -> " << etmof::resolve_output_path(p_out).string() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
