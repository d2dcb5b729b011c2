#pragma once

#include <span>
#include <vector>

#include "etmof/shape.hpp"

namespace etmof {

/// Distance used inside IGD. The competition definition is Manhattan in the
/// normalized objective space; Euclidean is available for side studies.
enum class IgdDistance { Manhattan, Euclidean };

/// Mean over the reference points of the distance to the nearest obtained
/// point, both sets normalized componentwise to [0,1] by the reference
/// front's ideal/nadir box. Throws on an empty obtained set.
double igd(const std::vector<Objectives>& obtained, const ReferenceFront& reference,
           IgdDistance distance = IgdDistance::Manhattan);

/// Mean of the per-change IGD values; the list length must match the
/// declared change count (30 under the standard protocol).
double migd(std::span<const double> per_change_igd, int expected_changes);

/// Mean standard score. values[o][r][i] is the IGD/MIGD of optimizer o, run
/// r, task i; the per-task mean and population standard deviation pool all
/// optimizers and runs. A task with sigma below 1e-12 contributes zero.
/// Returns scores[o][r].
std::vector<std::vector<double>> mean_standard_scores(
    const std::vector<std::vector<std::vector<double>>>& values);

} // namespace etmof
