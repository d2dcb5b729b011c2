#include "etmof/suite.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace etmof {
namespace {

// Compact notation for the per-objective landscape cases printed in the
// instance tables. A case list shorter than m extends cyclically.
struct CaseSpec {
  bool is_linkage = false;
  int fn = 1;
  TransformKind kind = TransformKind::Identity;
  LgOperator lg = LgOperator::None;
};

CaseSpec L(int fn, TransformKind kind = TransformKind::Rotation) {
  return {true, fn, kind, LgOperator::None};
}
CaseSpec B(int fn, TransformKind kind = TransformKind::Identity) {
  return {false, fn, kind, LgOperator::None};
}
CaseSpec BLg(int fn, LgOperator op) {
  return {false, fn, TransformKind::Identity, op};
}

LandscapeEvaluator make_evaluator(const CaseSpec& c, int id, int task, int group_index,
                                  int dim, double dlo, double dhi) {
  LandscapeEvaluator ev;
  if (c.is_linkage) {
    ev.is_linkage = true;
    ev.linkage = static_cast<LinkageFn>(c.fn);
  } else {
    ev.basic = basic_fn_from_ordinal(c.fn);
    ev.lg = c.lg;
  }
  if (c.kind != TransformKind::Identity) {
    ev.transform = make_transform(
        c.kind, bundle_seed(kSuiteVersionTag, id, task, group_index, c.kind), dim, dlo, dhi);
  }
  return ev;
}

TaskSpec static_task(int id, int task, int m, int n, int K, Model model, Shape shape,
                     const std::vector<CaseSpec>& cases, double dlo, double dhi) {
  TaskSpec ts;
  ts.instance_id = id;
  ts.task_index = task;
  ts.m = m;
  ts.n = n;
  ts.K = K;
  ts.L = n - K;
  ts.model = model;
  ts.shape = shape;
  ts.plan = build_grouping(n, K, m);
  ts.lower.assign(static_cast<std::size_t>(n), dlo);
  ts.upper.assign(static_cast<std::size_t>(n), dhi);
  for (int i = 0; i < K; ++i) {
    ts.lower[i] = -1.0;
    ts.upper[i] = 1.0;
  }

  if (model == Model::F1) {
    if (cases.size() != 1) throw std::logic_error("F1 takes a single landscape case");
    ts.assignment.evaluators.push_back(
        {make_evaluator(cases[0], id, task, 0, ts.L, dlo, dhi)});
  } else if (model == Model::F6 || model == Model::F7) {
    for (int i = 1; i <= m; ++i) {
      const CaseSpec& c = cases[static_cast<std::size_t>((i - 1) % cases.size())];
      if (c.kind != TransformKind::Identity) {
        throw std::logic_error("subgroup landscapes do not carry transform bundles");
      }
      std::vector<LandscapeEvaluator> per_sub;
      for (std::size_t j = 0; j < ts.plan.subgroups[static_cast<std::size_t>(i - 1)].size();
           ++j) {
        per_sub.push_back(make_evaluator(c, id, task, i, 0, dlo, dhi));
      }
      ts.assignment.evaluators.push_back(std::move(per_sub));
    }
  } else {
    for (int i = 1; i <= m; ++i) {
      const CaseSpec& c = cases[static_cast<std::size_t>((i - 1) % cases.size())];
      const int dim =
          static_cast<int>(ts.plan.distance_groups[static_cast<std::size_t>(i - 1)].size());
      ts.assignment.evaluators.push_back({make_evaluator(c, id, task, i, dim, dlo, dhi)});
    }
  }
  return ts;
}

TaskSpec dynamic_task(int id, int task, int m, int n, int K, DynamicFamily family,
                      BasicFn core, bool weighted, double dlo, double dhi) {
  TaskSpec ts;
  ts.instance_id = id;
  ts.task_index = task;
  ts.m = m;
  ts.n = n;
  ts.K = K;
  ts.L = n - K;
  ts.lower.assign(static_cast<std::size_t>(n), dlo);
  ts.upper.assign(static_cast<std::size_t>(n), dhi);
  for (int i = 0; i < K; ++i) {
    ts.lower[i] = 0.0;
    ts.upper[i] = 1.0;
  }
  DynamicsSpec d;
  d.family = family;
  d.g_core = core;
  d.g_time_weighted = weighted;
  ts.dynamics = d;
  return ts;
}

std::vector<TaskSpec> build_instance(int id) {
  using M = Model;
  using S = Shape;
  using K = TransformKind;
  const auto SR = K::ShiftRotation;
  switch (id) {
    case 1:
      return {static_task(id, 1, 2, 50, 1, M::F2, S::H1, {L(1)}, -10, 10),
              static_task(id, 2, 2, 50, 1, M::F3, S::H2, {L(1)}, -10, 10)};
    case 2:
      return {static_task(id, 1, 2, 50, 1, M::F3, S::H1, {L(2)}, -10, 10),
              static_task(id, 2, 2, 50, 1, M::F3, S::H1, {L(3)}, -10, 10)};
    case 3:
      return {static_task(id, 1, 2, 50, 1, M::F3, S::H1, {L(4), L(5)}, -10, 10),
              static_task(id, 2, 3, 51, 2, M::F3, S::H5, {L(6)}, -10, 10)};
    case 4:
      return {static_task(id, 1, 3, 51, 2, M::F4, S::H3, {B(3, SR), B(9, SR), B(10, SR)},
                          -100, 100),
              static_task(id, 2, 3, 51, 2, M::F4, S::H3, {B(5, SR), B(7, SR), B(8, SR)},
                          -100, 100)};
    case 5:
      return {static_task(id, 1, 3, 51, 2, M::F4, S::H4, {B(4, SR), B(6, SR), B(8, SR)},
                          -100, 100),
              static_task(id, 2, 3, 51, 2, M::F4, S::H6, {B(1, SR), B(6, SR), B(9, SR)},
                          -100, 100)};
    case 6:
      return {static_task(id, 1, 2, 50, 1, M::F1, S::H5, {B(13, SR)}, -100, 100),
              static_task(id, 2, 2, 50, 1, M::F4, S::H2, {B(11, SR), B(12, SR)}, -100, 100)};
    case 7:
      return {static_task(id, 1, 2, 50, 1, M::F2, S::H1, {L(2)}, -50, 50),
              static_task(id, 2, 2, 50, 1, M::F3, S::H2, {L(3)}, -50, 50),
              static_task(id, 3, 2, 50, 1, M::F2, S::H2, {L(8)}, -50, 50)};
    case 8: {
      std::vector<TaskSpec> tasks;
      const int second[] = {5, 6, 8};
      for (int k = 1; k <= 3; ++k) {
        tasks.push_back(
            static_task(id, k, 3, 50, 7, M::F7, S::H4, {B(1), B(second[k - 1])}, -10, 10));
      }
      return tasks;
    }
    case 9:
      return {static_task(id, 1, 5, 25, 4, M::F1, S::H4, {B(13)}, -10, 10),
              static_task(id, 2, 5, 53, 4, M::F1, S::H6, {B(13, K::Shift)}, -100, 100)};
    case 10:
      return {static_task(id, 1, 8, 56, 7, M::F2, S::H9, {B(14, K::Rotation)}, -20, 20),
              static_task(id, 2, 8, 56, 7, M::F3, S::H9, {B(9, K::Rotation)}, -10, 10)};
    case 11:
      return {static_task(id, 1, 10, 50, 9, M::F2, S::H7, {L(6, K::Identity)}, -20, 20),
              static_task(id, 2, 10, 50, 9, M::F3, S::H7, {L(7, K::Identity)}, -10, 10)};
    case 12:
      return {static_task(id, 1, 5, 53, 4, M::F2, S::H3, {L(4), L(5)}, -10, 10),
              static_task(id, 2, 8, 56, 7, M::F2, S::H5, {L(6)}, -10, 10),
              static_task(id, 3, 10, 58, 9, M::F2, S::H7, {L(7)}, -10, 10)};
    case 13:
      return {static_task(id, 1, 5, 53, 4, M::F1, S::H8, {B(9, K::Rotation)}, -10, 10),
              static_task(id, 2, 8, 56, 7, M::F3, S::H5, {L(2)}, -10, 10),
              static_task(id, 3, 10, 58, 9, M::F3, S::H9, {L(3)}, -10, 10)};
    case 14:
      return {static_task(id, 1, 5, 53, 4, M::F5, S::H10,
                          {B(1, K::Rotation), B(5, K::Rotation)}, -1, 1),
              static_task(id, 2, 8, 56, 7, M::F5, S::H10,
                          {B(14, K::Rotation), B(9, K::Rotation)}, -1, 1),
              static_task(id, 3, 10, 58, 9, M::F4, S::H10,
                          {B(1, K::Rotation), B(14, K::Rotation)}, -1, 1)};
    case 15:
      return {static_task(id, 1, 10, 99, 28, M::F6, S::H5, {B(1)}, -10, 10),
              static_task(id, 2, 10, 99, 28, M::F7, S::H5, {B(14)}, -10, 10)};
    case 16:
      return {static_task(id, 1, 5, 80, 13, M::F6, S::H3, {B(5), B(8)}, -10, 10),
              static_task(id, 2, 5, 80, 13, M::F7, S::H3, {B(5), B(9)}, -10, 10)};
    case 17:
      return {static_task(id, 1, 3, 256, 11, M::F6, S::H3, {BLg(1, LgOperator::Lg1)}, -10, 10),
              static_task(id, 2, 3, 256, 11, M::F6, S::H4, {BLg(1, LgOperator::Lg2)}, -10, 10)};
    case 18:
      return {static_task(id, 1, 2, 512, 6, M::F7, S::H5, {BLg(1, LgOperator::Lg1)}, -10, 10),
              static_task(id, 2, 2, 512, 6, M::F7, S::H7, {BLg(14, LgOperator::Lg1)}, -10, 10)};
    case 19:
      return {static_task(id, 1, 2, 1024, 6, M::F6, S::H3,
                          {BLg(1, LgOperator::Lg1), BLg(5, LgOperator::Lg1)}, -10, 10),
              static_task(id, 2, 2, 1024, 6, M::F6, S::H3,
                          {BLg(1, LgOperator::Lg1), BLg(9, LgOperator::Lg1)}, -10, 10)};
    case 20:
      return {static_task(id, 1, 2, 256, 6, M::F7, S::H2, {BLg(1, LgOperator::Lg2)}, -10, 10),
              static_task(id, 2, 2, 512, 6, M::F7, S::H3, {BLg(14, LgOperator::Lg2)}, -10, 10),
              static_task(id, 3, 2, 1024, 6, M::F7, S::H5,
                          {BLg(1, LgOperator::Lg2), BLg(14, LgOperator::Lg2)}, -10, 10)};
    case 21: {
      std::vector<TaskSpec> tasks;
      const int mids[][3] = {{1, 5, 6}, {14, 5, 8}, {1, 9, 6}};
      for (int k = 1; k <= 3; ++k) {
        tasks.push_back(static_task(id, k, 3, 512, 11, M::F6, S::H5,
                                    {BLg(mids[k - 1][0], LgOperator::Lg2),
                                     BLg(mids[k - 1][1], LgOperator::Lg2),
                                     BLg(mids[k - 1][2], LgOperator::Lg2)},
                                    -10, 10));
      }
      return tasks;
    }
    case 22: {
      std::vector<TaskSpec> tasks;
      tasks.push_back(static_task(id, 1, 3, 256, 11, M::F6, S::H4,
                                  {BLg(5, LgOperator::Lg1), BLg(6, LgOperator::Lg1),
                                   BLg(9, LgOperator::Lg1)},
                                  -10, 10));
      tasks.push_back(static_task(id, 2, 3, 512, 11, M::F7, S::H4,
                                  {BLg(5, LgOperator::Lg2), BLg(6, LgOperator::Lg2),
                                   BLg(9, LgOperator::Lg2)},
                                  -10, 10));
      tasks.push_back(static_task(id, 3, 3, 1024, 11, M::F6, S::H4,
                                  {BLg(5, LgOperator::Lg2), BLg(6, LgOperator::Lg2),
                                   BLg(9, LgOperator::Lg2)},
                                  -10, 10));
      return tasks;
    }
    case 23:
      return {static_task(id, 1, 2, 2048, 6, M::F6, S::H3, {BLg(1, LgOperator::Lg1)}, -10, 10),
              static_task(id, 2, 2, 4096, 6, M::F6, S::H3,
                          {BLg(1, LgOperator::Lg1), BLg(5, LgOperator::Lg1)}, -10, 10)};
    case 24:
      return {static_task(id, 1, 2, 5000, 6, M::F6, S::H3,
                          {BLg(1, LgOperator::Lg1), BLg(9, LgOperator::Lg1)}, -10, 10),
              static_task(id, 2, 2, 10000, 6, M::F6, S::H3,
                          {BLg(5, LgOperator::Lg1), BLg(9, LgOperator::Lg1)}, -10, 10)};
    case 25: {
      std::vector<TaskSpec> tasks;
      const struct { int fn; double b; } rows[] = {{1, 10}, {2, 5}, {3, 1}, {5, 5}, {7, 10}};
      for (int k = 1; k <= 5; ++k) {
        tasks.push_back(static_task(id, k, 2, 50, 1, M::F3, S::H1, {L(rows[k - 1].fn)},
                                    -rows[k - 1].b, rows[k - 1].b));
      }
      return tasks;
    }
    case 26: {
      std::vector<TaskSpec> tasks;
      const struct { int fn; double b; } byMod5[] = {{1, 10}, {2, 5}, {3, 1}, {4, 5}, {7, 10}};
      const Shape byMod3[] = {S::H1, S::H2, S::H3};
      for (int k = 1; k <= 10; ++k) {
        const Model model = k % 2 == 0 ? M::F2 : M::F3;
        const Shape shape = byMod3[k % 3];
        const auto& row = byMod5[k % 5];
        tasks.push_back(static_task(id, k, 2, 50, 1, model, shape, {L(row.fn)}, -row.b, row.b));
      }
      return tasks;
    }
    case 27: {
      std::vector<TaskSpec> tasks;
      const int byMod5[] = {5, 6, 7, 8, 9};
      for (int k = 1; k <= 10; ++k) {
        const bool first_half = k <= 5;
        tasks.push_back(static_task(id, k, 3, 50, 7, first_half ? M::F6 : M::F7, S::H3,
                                    {BLg(byMod5[k % 5],
                                         first_half ? LgOperator::Lg1 : LgOperator::Lg2)},
                                    -10, 10));
      }
      return tasks;
    }
    case 28: {
      std::vector<TaskSpec> tasks;
      const struct { int fn; double b; } byMod5[] = {
          {1, 50}, {5, 10}, {6, 20}, {8, 30}, {9, 40}};
      const Shape byMod3[] = {S::H3, S::H5, S::H7};
      for (int k = 1; k <= 20; ++k) {
        const Model model = k % 2 == 0 ? M::F2 : M::F3;
        const Shape shape = byMod3[k % 3];
        const auto& row = byMod5[k % 5];
        tasks.push_back(static_task(id, k, 3, 51, 2, model, shape,
                                    {B(row.fn, K::Rotation)}, -row.b, row.b));
      }
      return tasks;
    }
    case 29: {
      std::vector<TaskSpec> tasks;
      const struct { int fn; double b; } byMod3[] = {{1, 50}, {3, 100}, {6, 0.5}};
      for (int k = 1; k <= 30; ++k) {
        const Shape shape = k % 2 == 0 ? S::H4 : S::H6;
        const auto& row = byMod3[k % 3];
        tasks.push_back(
            static_task(id, k, 3, 51, 2, M::F1, shape, {B(row.fn, SR)}, -row.b, row.b));
      }
      return tasks;
    }
    case 30: {
      std::vector<TaskSpec> tasks;
      const struct { int fn; double b; } byMod5[] = {
          {5, 50}, {6, 50}, {9, 50}, {7, 100}, {8, 0.5}};
      for (int k = 1; k <= 40; ++k) {
        const auto& row = byMod5[k % 5];
        tasks.push_back(
            static_task(id, k, 2, 50, 1, M::F1, S::H1, {B(row.fn, SR)}, -row.b, row.b));
      }
      return tasks;
    }
    case 31: {
      std::vector<TaskSpec> tasks;
      const struct { int fn; double b; } byMod6[] = {
          {1, 60}, {2, 50}, {3, 40}, {4, 30}, {5, 20}, {7, 10}};
      for (int k = 1; k <= 50; ++k) {
        const auto& row = byMod6[k % 6];
        tasks.push_back(
            static_task(id, k, 2, 50, 1, M::F3, S::H2, {L(row.fn)}, -row.b, row.b));
      }
      return tasks;
    }
    case 32: {
      // Printed as b_k for k <= 10 / b_{k-14} otherwise, which leaves tasks
      // 11..14 undefined; the split at 14 covers every basic function with
      // each operator and keeps task 15 on b1(Lg2) as listed.
      std::vector<TaskSpec> tasks;
      for (int k = 1; k <= 28; ++k) {
        const int fn = k <= 14 ? k : k - 14;
        const LgOperator op = k <= 14 ? LgOperator::Lg1 : LgOperator::Lg2;
        tasks.push_back(static_task(id, k, 3, 80, 7, M::F6, S::H5, {BLg(fn, op)}, -10, 10));
      }
      return tasks;
    }
    case 33:
      return {dynamic_task(id, 1, 2, 256, 1, DynamicFamily::DMOP2, BasicFn::Sphere, false, -1, 1),
              dynamic_task(id, 2, 2, 256, 1, DynamicFamily::ZJZ, BasicFn::Sphere, false, -1, 2)};
    case 34:
      return {dynamic_task(id, 1, 2, 50, 1, DynamicFamily::DF2, BasicFn::Sphere, false, 0, 1),
              dynamic_task(id, 2, 2, 50, 1, DynamicFamily::DF2, BasicFn::Rastrigin, false, 0, 1)};
    case 35:
      return {dynamic_task(id, 1, 2, 512, 1, DynamicFamily::DF5, BasicFn::Sphere, false, -1, 1),
              dynamic_task(id, 2, 2, 512, 1, DynamicFamily::DF6, BasicFn::Sphere, true, -1, 1)};
    case 36:
      return {dynamic_task(id, 1, 2, 5000, 1, DynamicFamily::DF8, BasicFn::Sphere, false, -1, 1),
              dynamic_task(id, 2, 2, 10000, 1, DynamicFamily::DF6, BasicFn::Sphere, true, -1, 1)};
    case 37:
      return {dynamic_task(id, 1, 3, 50, 2, DynamicFamily::DF10, BasicFn::Sphere, false, -1, 1),
              dynamic_task(id, 2, 3, 50, 2, DynamicFamily::DF11, BasicFn::Sphere, false, 0, 1)};
    case 38:
      return {dynamic_task(id, 1, 3, 50, 2, DynamicFamily::DF12, BasicFn::Sphere, false, -1, 1),
              dynamic_task(id, 2, 3, 50, 2, DynamicFamily::DF11, BasicFn::Sphere, false, 0, 1)};
    case 39:
      return {dynamic_task(id, 1, 2, 50, 1, DynamicFamily::DF5, BasicFn::Sphere, false, -1, 1),
              dynamic_task(id, 2, 2, 50, 1, DynamicFamily::DF5, BasicFn::Rosenbrock, false, -1, 1),
              dynamic_task(id, 3, 2, 50, 1, DynamicFamily::DF5, BasicFn::Griewank, false, -1, 1)};
    case 40:
      return {dynamic_task(id, 1, 2, 50, 1, DynamicFamily::DF6, BasicFn::Rosenbrock, false, -1, 1),
              dynamic_task(id, 2, 2, 50, 1, DynamicFamily::DF6, BasicFn::Ackley, false, -1, 1),
              dynamic_task(id, 3, 2, 50, 1, DynamicFamily::DF6, BasicFn::Rastrigin, false, -1, 1)};
    default:
      throw std::invalid_argument("instantiate: instance id must be in 1..40");
  }
}

std::string format_bound(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string range_of(const std::vector<int>& ids) {
  return std::to_string(ids.front()) + "-" + std::to_string(ids.back());
}

// Audit line for one task's variable partition: position/distance group
// ranges plus the subgroup count per distance group.
std::string plan_audit_line(const TaskSpec& t) {
  std::string out = "# plan ETMOF" + std::to_string(t.instance_id) + " T" +
                    std::to_string(t.task_index) + " pos ";
  for (std::size_t i = 0; i < t.plan.position_groups.size(); ++i) {
    if (i) out += "|";
    out += range_of(t.plan.position_groups[i]);
  }
  out += " dist ";
  for (std::size_t i = 0; i < t.plan.distance_groups.size(); ++i) {
    if (i) out += "|";
    out += range_of(t.plan.distance_groups[i]);
  }
  out += " q ";
  for (std::size_t i = 0; i < t.plan.subgroups.size(); ++i) {
    if (i) out += "|";
    out += std::to_string(t.plan.subgroups[i].size());
  }
  return out;
}

} // namespace

std::string TaskSpec::model_label() const {
  return is_dynamic() ? dynamics->label() : std::string(model_tag(model));
}

std::string TaskSpec::shape_label() const {
  return is_dynamic() ? std::string("-") : std::string(shape_tag(shape));
}

std::string TaskSpec::landscape_label() const {
  if (is_dynamic()) return dynamics->label();
  std::string out;
  std::vector<std::string> seen;
  for (const auto& group : assignment.evaluators) {
    for (const auto& ev : group) {
      const std::string lbl = ev.label();
      if (std::find(seen.begin(), seen.end(), lbl) == seen.end()) {
        if (!out.empty()) out += ",";
        out += lbl;
        seen.push_back(lbl);
      }
    }
  }
  return out;
}

std::string TaskSpec::bounds_label() const {
  const std::size_t last = static_cast<std::size_t>(n - 1);
  return "[" + format_bound(lower[last]) + "," + format_bound(upper[last]) + "]";
}

MultiTaskProblem::MultiTaskProblem(int instance_id, std::vector<TaskSpec> tasks)
    : instance_id_(instance_id),
      tasks_(std::move(tasks)),
      unified_dim_(0),
      counters_(tasks_.size()) {
  for (const auto& t : tasks_) unified_dim_ = std::max(unified_dim_, t.n);
}

const TaskSpec& MultiTaskProblem::task(int task_index) const {
  if (task_index < 1 || task_index > task_count()) {
    throw std::invalid_argument("task index out of range: " + std::to_string(task_index));
  }
  return tasks_[static_cast<std::size_t>(task_index - 1)];
}

Objectives MultiTaskProblem::evaluate(int task_index, std::span<const double> x,
                                      std::optional<double> t) const {
  const TaskSpec& ts = task(task_index);
  if (static_cast<int>(x.size()) != ts.n) {
    throw std::invalid_argument("evaluate: |x| must be " + std::to_string(ts.n));
  }
  if (ts.is_dynamic() != t.has_value()) {
    throw std::invalid_argument(ts.is_dynamic()
                                    ? "evaluate: dynamic task needs a time instant"
                                    : "evaluate: static task takes no time instant");
  }
  counters_[static_cast<std::size_t>(task_index - 1)].bump();
  if (ts.is_dynamic()) return evaluate_dynamic(ts, x, *t);
  return evaluate_objectives(ts.model, ts.plan, ts.shape, ts.assignment, ts.lower, ts.upper, x);
}

std::int64_t MultiTaskProblem::eval_count(int task_index) const {
  task(task_index);
  return counters_[static_cast<std::size_t>(task_index - 1)].value();
}

void MultiTaskProblem::reset_counters() const {
  for (const auto& c : counters_) c.reset();
}

MultiTaskProblem instantiate(int etmof_id) {
  return MultiTaskProblem(etmof_id, build_instance(etmof_id));
}

std::string_view instance_category(int etmof_id) {
  if (etmof_id < 1 || etmof_id > kInstanceCount) {
    throw std::invalid_argument("instance_category: id out of range");
  }
  if (etmof_id <= 8) return "MO";
  if (etmof_id <= 16) return "MaO";
  if (etmof_id <= 24) return "LS";
  if (etmof_id <= 32) return "MaT";
  return "Dyn";
}

int instance_task_count(int etmof_id) {
  static constexpr int counts[kInstanceCount] = {
      2, 2, 2, 2, 2, 2, 3, 3,          // ETMOF1-8
      2, 2, 2, 3, 3, 3, 2, 2,          // ETMOF9-16
      2, 2, 2, 3, 3, 3, 2, 2,          // ETMOF17-24
      5, 10, 10, 20, 30, 40, 50, 28,   // ETMOF25-32
      2, 2, 2, 2, 2, 2, 3, 3};         // ETMOF33-40
  if (etmof_id < 1 || etmof_id > kInstanceCount) {
    throw std::invalid_argument("instance_task_count: id out of range");
  }
  return counts[etmof_id - 1];
}

std::string catalog_text() {
  std::ostringstream os;
  os << "# ETMOF benchmark catalog, suite version " << kSuiteVersionTag << "\n";
  os << "# instance rows: instance category tasks\n";
  os << "# task rows:     instance task m n K L model shape landscape bounds\n";
  for (int id = 1; id <= kInstanceCount; ++id) {
    const MultiTaskProblem problem = instantiate(id);
    os << "ETMOF" << id << " " << instance_category(id) << " " << problem.task_count()
       << "\n";
    for (const TaskSpec& t : problem.tasks()) {
      os << "ETMOF" << id << " T" << t.task_index << " " << t.m << " " << t.n << " "
         << t.K << " " << t.L << " " << t.model_label() << " " << t.shape_label() << " "
         << t.landscape_label() << " " << t.bounds_label() << "\n";
      if (!t.is_dynamic()) os << plan_audit_line(t) << "\n";
    }
  }
  return os.str();
}

} // namespace etmof
