#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "etmof/metrics.hpp"
#include "etmof/optimizer.hpp"

namespace etmof {

struct OptimizerSpec {
  std::string name;
  SolverMode mode = SolverMode::Transfer;
  SolverConfig config;
};

struct CampaignConfig {
  std::uint64_t master_seed = 1;
  int runs = 21; // a fresh derived seed per run
  std::filesystem::path output = "etmof_out";
  int workers = 1;
  std::int64_t budget_override = 0; // 0 keeps the protocol default
  std::vector<int> instances;
  std::vector<OptimizerSpec> optimizers;
};

/// Flat "key = value" sections: [campaign], [instances], [optimizer <name>].
CampaignConfig parse_campaign_config(const std::string& text);
CampaignConfig load_campaign_config(const std::filesystem::path& path);

/// Per-cell seed: a hash chain over (master seed, instance, optimizer name,
/// run index). Logged next to the results so any cell can be replayed.
std::uint64_t derive_run_seed(std::uint64_t master_seed, int instance_id,
                              const std::string& optimizer_name, int run_index);

struct MetricRow {
  std::string optimizer;
  int instance = 0;
  int task = 0;
  int run = 0;
  std::uint64_t seed = 0;
  std::string metric; // "igd" or "migd"
  double value = 0.0;
};

struct MssRow {
  std::string optimizer;
  int instance = 0;
  int run = 0;
  double value = 0.0;
};

/// Lazily built, thread-safe store of reference fronts keyed by task (and
/// change index for dynamic tasks).
class ReferenceFrontCache {
public:
  const ReferenceFront& front_for(const TaskSpec& task, int change_index = -1);

private:
  std::mutex mu_;
  std::map<std::string, ReferenceFront> fronts_;
};

/// Writes one run's archive tree under dir: per-task checkpoint and change
/// fronts, the final fronts, and a meta file echoing the configuration.
void write_run_record(const std::filesystem::path& dir, const RunRecord& rec,
                      const std::string& optimizer_name, int run_index,
                      const MultiTaskProblem& problem);

/// Per-task metric rows of one run (IGD for static, MIGD for dynamic).
std::vector<MetricRow> score_run(const RunRecord& rec, const MultiTaskProblem& problem,
                                 const std::string& optimizer_name, int run_index,
                                 ReferenceFrontCache& cache);

std::vector<MssRow> mss_from_metrics(const std::vector<MetricRow>& rows);

void write_metrics_csv(const std::filesystem::path& path,
                       const std::vector<MetricRow>& rows);
std::vector<MetricRow> read_metrics_csv(const std::filesystem::path& path);
void write_mss_csv(const std::filesystem::path& path, const std::vector<MssRow>& rows);

struct CampaignResult {
  std::filesystem::path root;
  int failed_cells = 0;
  std::vector<MetricRow> metrics;
  std::vector<MssRow> mss;
};

/// Raised when the output tree already holds runs and force was not given.
struct CampaignExistsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Executes every (instance x optimizer x run) cell on a worker pool, writes
/// the run tree plus metrics.csv / mss.csv / seeds.log / cells.csv.
CampaignResult run_campaign(const CampaignConfig& cfg, bool force);

/// Recomputes metric rows from a results tree previously written by
/// run_campaign (the `metrics` subcommand path).
std::vector<MetricRow> compute_metrics_from_tree(const std::filesystem::path& root);

/// Emits plain-numeric plot files for one run directory: per-checkpoint
/// scatter data, an IGD-vs-evaluations series per task, and the MIGD series
/// for dynamic runs.
void emit_plot_data(const std::filesystem::path& run_dir,
                    const std::filesystem::path& out_dir);

/// Applies the ETMOF_OUTPUT_ROOT environment variable to relative paths.
std::filesystem::path resolve_output_path(const std::filesystem::path& p);

} // namespace etmof
