#pragma once

#include <span>
#include <string>
#include <vector>

#include "etmof/basic_functions.hpp"
#include "etmof/grouping.hpp"
#include "etmof/linkage.hpp"
#include "etmof/pareto.hpp"
#include "etmof/shape.hpp"
#include "etmof/transform.hpp"

namespace etmof {

/// How shape and landscape values combine into objectives. F1 shares one g;
/// F2/F3 use one g per objective (multiplicative/additive); F4/F5 use the
/// summed g; F6/F7 average subgroup g's.
enum class Model : int { F1 = 1, F2, F3, F4, F5, F6, F7 };

std::string_view model_tag(Model m); // "F1".."F7"

/// One landscape evaluator: a basic function behind an optional transform or
/// Lg operator, or a linkage function behind an optional rotation.
struct LandscapeEvaluator {
  bool is_linkage = false;
  BasicFn basic = BasicFn::Sphere;
  LinkageFn linkage = LinkageFn::L1;
  LgOperator lg = LgOperator::None;
  TransformBundle transform;

  std::string label() const; // e.g. "L1(rot)", "b3(shiftRot)", "b1(Lg1)"
};

/// evaluators[g][j]: F1 holds exactly one evaluator covering the whole
/// distance block; F2..F5 hold one per distance group (j = 0); F6/F7 hold
/// one per subgroup.
struct LandscapeAssignment {
  std::vector<std::vector<LandscapeEvaluator>> evaluators;
};

/// Landscape values exposed for audits and optimum-consistency checks.
struct GTerms {
  std::vector<double> raw;       // every evaluator output, group-major
  std::vector<double> per_group; // F1: the single g; F6/F7: subgroup means
  double combined = 0.0;         // value fed to g-embedding shapes
};

double eval_landscape(const LandscapeEvaluator& ev, std::span<const double> values,
                      std::span<const int> global_index, int n_total, double y1,
                      double y2, std::span<const double> lo_slice,
                      std::span<const double> hi_slice);

/// Full objective evaluation for a static task. lo/hi are the per-index
/// bounds of the whole solution vector (consumed by Lg operators).
Objectives evaluate_objectives(Model model, const GroupingPlan& plan, Shape shape,
                               const LandscapeAssignment& assign,
                               std::span<const double> lo, std::span<const double> hi,
                               std::span<const double> x, GTerms* terms = nullptr);

} // namespace etmof
