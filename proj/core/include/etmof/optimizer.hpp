#pragma once

#include <cstdint>
#include <vector>

#include "etmof/pareto.hpp"
#include "etmof/suite.hpp"

namespace etmof {

enum class SolverMode { Transfer, Independent };

std::string_view solver_mode_tag(SolverMode m); // "transfer" / "independent"

struct SolverConfig {
  int population = 100;          // per task, static instances
  int dynamic_population = 150;  // per task, dynamic instances
  double rmp = 0.3;              // cross-task mating probability
  double sbx_index = 20.0;
  double mutation_index = 20.0;
  double mutation_rate = -1.0;   // < 0 means 1/unified_dim
  std::uint64_t seed = 1;
  std::int64_t budget_per_task = -1; // < 0 means the protocol default
  int archive_cap_factor = 10;       // archive holds at most factor * population
};

/// Protocol budget: 100000 evaluations per static task; population * 31 *
/// tau_t per dynamic task (150 * 620 under the defaults, i.e. 30 changes).
std::int64_t default_budget(const MultiTaskProblem& problem, const SolverConfig& cfg);

struct CheckpointFront {
  int percent = 0;              // 10, 20, ..., 100
  std::int64_t evaluations = 0; // budgeted evaluations when snapshotted
  std::vector<Objectives> points;
};

struct TaskRunResult {
  std::vector<CheckpointFront> checkpoints;
  std::vector<std::vector<Objectives>> change_fronts; // dynamic: one per change
  std::vector<Objectives> final_front;
  std::int64_t evaluations = 0; // budgeted evaluations only
};

struct RunRecord {
  int instance_id = 0;
  SolverMode mode = SolverMode::Transfer;
  SolverConfig config;
  std::int64_t budget = 0;
  int changes = 0;                    // environment changes seen (dynamic)
  std::int64_t cross_task_matings = 0;
  std::vector<TaskRunResult> tasks;
};

/// Affine gene decoding into the task's box: x_j = lo_j + gene_j*(hi_j-lo_j).
std::vector<double> decode_genes(std::span<const double> genes, const TaskSpec& task);

/// One full run. Deterministic in (problem, cfg, mode): a repeated run with
/// the same seed reproduces every archive bit-for-bit.
RunRecord run_solver(const MultiTaskProblem& problem, const SolverConfig& cfg,
                     SolverMode mode);

/// Uniform-random sampling with the same per-task budget; the sanity
/// yardstick a working optimizer must beat. Returns one front per task.
std::vector<std::vector<Objectives>> random_sampling_fronts(
    const MultiTaskProblem& problem, std::uint64_t seed, std::int64_t budget_per_task,
    int archive_cap);

} // namespace etmof
