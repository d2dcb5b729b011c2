#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace etmof {

/// Landscape functions whose optimum manifold depends on the position
/// aggregates, coupling distance and position variables.
enum class LinkageFn : int { L1 = 1, L2, L3, L4, L5, L6, L7, L8 };

std::string_view linkage_fn_tag(LinkageFn fn); // "L1".."L8"

/// Index-dependent variable transformations that induce interaction in the
/// large-scale tasks; Lg1 scales linearly in the ordinal, Lg2 nonlinearly.
enum class LgOperator : int { None = 0, Lg1 = 1, Lg2 = 2 };

/// A run of distance variables together with each element's 1-based ordinal
/// in the full solution vector. The ordinals drive the per-element targets
/// and the Lg scaling, so they must survive any rotation of the values.
struct IndexedSlice {
  std::span<const double> values;
  std::span<const int> global_index; // strictly increasing, 1-based
  int n_total = 0;
};

/// Closed-form target the element at `global_index` must hit for the
/// corresponding residual of `fn` to vanish.
double linkage_target(LinkageFn fn, int global_index, int n_total, double y1, double y2);

/// Evaluates fn on the slice. y2 is consumed only by L6 (required there);
/// a supplied y2 is ignored by the other functions. Throws
/// std::invalid_argument for an empty slice, a missing y2 with L6, or
/// n_total < 3 with L2/L3/L8 (their exponent divides by n_total - 2).
double eval_linkage(LinkageFn fn, const IndexedSlice& xd, double y1,
                    std::optional<double> y2 = std::nullopt);

/// Applies Lg1/Lg2 elementwise: z_j = scale(idx_j) * x_j - y1 * (hi_j - lo_j)
/// with scale(idx) = 1 + idx/n for Lg1 and 1 + cos(0.5*pi*idx/n) for Lg2.
/// lo/hi are the bounds of the slice elements, aligned with xd.values.
std::vector<double> apply_linkage_operator(LgOperator op, const IndexedSlice& xd,
                                           double y1, std::span<const double> lo,
                                           std::span<const double> hi);

} // namespace etmof
