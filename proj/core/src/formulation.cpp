#include "etmof/formulation.hpp"

#include <numeric>
#include <stdexcept>

namespace etmof {
namespace {

void gather(std::span<const double> x, const std::vector<int>& idx,
            std::vector<double>& values) {
  values.resize(idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    values[j] = x[static_cast<std::size_t>(idx[j] - 1)];
  }
}

void gather_bounds(std::span<const double> lo, std::span<const double> hi,
                   const std::vector<int>& idx, std::vector<double>& lo_s,
                   std::vector<double>& hi_s) {
  lo_s.resize(idx.size());
  hi_s.resize(idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    lo_s[j] = lo[static_cast<std::size_t>(idx[j] - 1)];
    hi_s[j] = hi[static_cast<std::size_t>(idx[j] - 1)];
  }
}

} // namespace

std::string_view model_tag(Model m) {
  static constexpr std::string_view tags[] = {"F1", "F2", "F3", "F4", "F5", "F6", "F7"};
  return tags[static_cast<int>(m) - 1];
}

std::string LandscapeEvaluator::label() const {
  std::string base = is_linkage ? std::string(linkage_fn_tag(linkage))
                                : std::string(basic_fn_tag(basic));
  if (lg == LgOperator::Lg1) return base + "(Lg1)";
  if (lg == LgOperator::Lg2) return base + "(Lg2)";
  const bool rot = transform.has_rotation();
  const bool sh = transform.has_shift();
  if (rot && sh) return base + "(shiftRot)";
  if (rot) return base + "(rot)";
  if (sh) return base + "(shift)";
  return base;
}

double eval_landscape(const LandscapeEvaluator& ev, std::span<const double> values,
                      std::span<const int> global_index, int n_total, double y1,
                      double y2, std::span<const double> lo_slice,
                      std::span<const double> hi_slice) {
  const IndexedSlice slice{values, global_index, n_total};
  if (ev.is_linkage) {
    if (ev.transform.has_rotation() || ev.transform.has_shift()) {
      const std::vector<double> z = ev.transform.apply(values);
      const IndexedSlice rotated{z, global_index, n_total};
      return ev.linkage == LinkageFn::L6 ? eval_linkage(ev.linkage, rotated, y1, y2)
                                         : eval_linkage(ev.linkage, rotated, y1);
    }
    return ev.linkage == LinkageFn::L6 ? eval_linkage(ev.linkage, slice, y1, y2)
                                       : eval_linkage(ev.linkage, slice, y1);
  }
  if (ev.lg != LgOperator::None) {
    const std::vector<double> z = apply_linkage_operator(ev.lg, slice, y1, lo_slice, hi_slice);
    return eval_basic(ev.basic, z);
  }
  if (ev.transform.has_rotation() || ev.transform.has_shift()) {
    const std::vector<double> z = ev.transform.apply(values);
    return eval_basic(ev.basic, z);
  }
  return eval_basic(ev.basic, values);
}

Objectives evaluate_objectives(Model model, const GroupingPlan& plan, Shape shape,
                               const LandscapeAssignment& assign,
                               std::span<const double> lo, std::span<const double> hi,
                               std::span<const double> x, GTerms* terms) {
  const int m = plan.m;
  if (static_cast<int>(x.size()) != plan.n) {
    throw std::invalid_argument("evaluate_objectives: |x| must equal n");
  }

  const std::vector<double> y = aggregate_positions(plan, x);
  const double y1 = y[0];
  const double y2 = m >= 3 ? y[1] : y[0];

  const bool whole = model == Model::F1;
  const bool per_subgroup = model == Model::F6 || model == Model::F7;
  const std::size_t expected_groups = whole ? 1 : static_cast<std::size_t>(m);
  if (assign.evaluators.size() != expected_groups) {
    throw std::invalid_argument("evaluate_objectives: assignment/model group mismatch");
  }

  GTerms local;
  GTerms& gt = terms ? *terms : local;
  gt.raw.clear();
  gt.per_group.clear();

  std::vector<double> values, lo_s, hi_s;
  std::vector<int> whole_idx;

  if (whole) {
    for (const auto& group : plan.distance_groups) {
      whole_idx.insert(whole_idx.end(), group.begin(), group.end());
    }
    gather(x, whole_idx, values);
    gather_bounds(lo, hi, whole_idx, lo_s, hi_s);
    const double g =
        eval_landscape(assign.evaluators[0][0], values, whole_idx, plan.n, y1, y2, lo_s, hi_s);
    gt.raw.push_back(g);
    gt.per_group.push_back(g);
  } else {
    for (int i = 0; i < m; ++i) {
      const auto& group_evals = assign.evaluators[static_cast<std::size_t>(i)];
      if (per_subgroup) {
        const auto& subs = plan.subgroups[static_cast<std::size_t>(i)];
        if (group_evals.size() != subs.size()) {
          throw std::invalid_argument("evaluate_objectives: assignment/subgroup mismatch");
        }
        double sum = 0.0;
        for (std::size_t j = 0; j < subs.size(); ++j) {
          gather(x, subs[j], values);
          gather_bounds(lo, hi, subs[j], lo_s, hi_s);
          const double g =
              eval_landscape(group_evals[j], values, subs[j], plan.n, y1, y2, lo_s, hi_s);
          gt.raw.push_back(g);
          sum += g;
        }
        gt.per_group.push_back(sum / static_cast<double>(subs.size()));
      } else {
        if (group_evals.size() != 1) {
          throw std::invalid_argument("evaluate_objectives: one evaluator per group expected");
        }
        const auto& group = plan.distance_groups[static_cast<std::size_t>(i)];
        gather(x, group, values);
        gather_bounds(lo, hi, group, lo_s, hi_s);
        const double g =
            eval_landscape(group_evals[0], values, group, plan.n, y1, y2, lo_s, hi_s);
        gt.raw.push_back(g);
        gt.per_group.push_back(g);
      }
    }
  }

  switch (model) {
    case Model::F1:
      gt.combined = gt.per_group[0];
      break;
    case Model::F4:
    case Model::F5:
      gt.combined = std::accumulate(gt.per_group.begin(), gt.per_group.end(), 0.0);
      break;
    default:
      gt.combined = std::accumulate(gt.per_group.begin(), gt.per_group.end(), 0.0) /
                    static_cast<double>(gt.per_group.size());
      break;
  }

  const bool embedded_g = shape_needs_g(shape);
  const std::vector<double> h =
      embedded_g ? eval_shape(shape, y, m, gt.combined) : eval_shape(shape, y, m);

  Objectives f(static_cast<std::size_t>(m));
  switch (model) {
    case Model::F1:
      // H8/H10 embed g in their displays, which is the complete objective
      // definition; only g-free shapes get the (1 + g) multiplier.
      for (int k = 0; k < m; ++k) {
        f[k] = embedded_g ? h[k] : h[k] * (1.0 + gt.combined);
      }
      break;
    case Model::F2:
      for (int k = 0; k < m; ++k) f[k] = h[k] * (1.0 + gt.per_group[k]);
      break;
    case Model::F3:
      for (int k = 0; k < m; ++k) f[k] = h[k] + gt.per_group[k];
      break;
    case Model::F4:
      for (int k = 0; k < m; ++k) f[k] = h[k] * (1.0 + gt.combined);
      break;
    case Model::F5:
      for (int k = 0; k < m; ++k) f[k] = h[k] + gt.combined;
      break;
    case Model::F6:
      for (int k = 0; k < m; ++k) f[k] = h[k] * (1.0 + gt.per_group[k]);
      break;
    case Model::F7:
      for (int k = 0; k < m; ++k) f[k] = h[k] + gt.per_group[k];
      break;
  }
  return f;
}

} // namespace etmof
