#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "etmof/dynamics.hpp"
#include "etmof/formulation.hpp"

namespace etmof {

inline constexpr int kInstanceCount = 40;

/// Full recipe for one task of an instance. Static tasks carry the grouping
/// plan, model, shape and landscape assignment; dynamic tasks carry a
/// DynamicsSpec instead and are evaluated by their closed forms.
struct TaskSpec {
  int instance_id = 0;
  int task_index = 0; // 1-based
  int m = 0;
  int n = 0;
  int K = 0;
  int L = 0;
  Model model = Model::F1;
  Shape shape = Shape::H1;
  GroupingPlan plan;
  LandscapeAssignment assignment;
  std::vector<double> lower; // per-index bounds, size n
  std::vector<double> upper;
  std::optional<DynamicsSpec> dynamics;

  bool is_dynamic() const { return dynamics.has_value(); }
  std::string model_label() const;
  std::string shape_label() const;
  std::string landscape_label() const;
  std::string bounds_label() const; // distance-variable bounds
};

namespace detail {
class RelaxedCounter {
public:
  RelaxedCounter() = default;
  RelaxedCounter(const RelaxedCounter& o) : v_(o.v_.load(std::memory_order_relaxed)) {}
  RelaxedCounter& operator=(const RelaxedCounter& o) {
    v_.store(o.v_.load(std::memory_order_relaxed), std::memory_order_relaxed);
    return *this;
  }
  void bump() const { v_.fetch_add(1, std::memory_order_relaxed); }
  std::int64_t value() const { return v_.load(std::memory_order_relaxed); }
  void reset() const { v_.store(0, std::memory_order_relaxed); }

private:
  mutable std::atomic<std::int64_t> v_{0};
};
} // namespace detail

/// One ETMOF instance: an ordered bundle of tasks sharing a unified search
/// space of dimension max(n). Immutable after construction apart from the
/// per-task evaluation counters; concurrent runs should use independent
/// copies.
class MultiTaskProblem {
public:
  MultiTaskProblem(int instance_id, std::vector<TaskSpec> tasks);

  int instance_id() const { return instance_id_; }
  int task_count() const { return static_cast<int>(tasks_.size()); }
  const TaskSpec& task(int task_index) const; // 1-based
  const std::vector<TaskSpec>& tasks() const { return tasks_; }
  int unified_dim() const { return unified_dim_; }
  bool is_dynamic() const { return tasks_.front().is_dynamic(); }

  /// Evaluates task task_index (1-based) at x; t must be present exactly
  /// for dynamic tasks. Bumps the task's evaluation counter.
  Objectives evaluate(int task_index, std::span<const double> x,
                      std::optional<double> t = std::nullopt) const;

  std::int64_t eval_count(int task_index) const;
  void reset_counters() const;

private:
  int instance_id_;
  std::vector<TaskSpec> tasks_;
  int unified_dim_;
  std::vector<detail::RelaxedCounter> counters_;
};

/// Builds the fully resolved instance (1..40): grouping, transforms,
/// landscape assignments and bounds. Deterministic in the instance id.
MultiTaskProblem instantiate(int etmof_id);

/// Category tag by instance block: multi-objective, many-objective,
/// large-scale, many-task, dynamic.
std::string_view instance_category(int etmof_id);
int instance_task_count(int etmof_id);

/// The full instance table as structured text (one summary row per
/// instance, one row per task).
std::string catalog_text();

} // namespace etmof
