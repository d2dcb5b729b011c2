#pragma once

#include <span>
#include <vector>

namespace etmof {

/// Three-layer variable partition: position/distance split, per-objective
/// groups, and subgroups of each distance group. All index lists hold
/// 1-based ordinals into the full solution vector, strictly increasing,
/// and the layers are disjoint covers.
struct GroupingPlan {
  int n = 0;
  int K = 0;
  int L = 0;
  int m = 0;
  std::vector<std::vector<int>> position_groups;          // m-1 lists over 1..K
  std::vector<std::vector<int>> distance_groups;          // m lists over K+1..n
  std::vector<std::vector<std::vector<int>>> subgroups;   // per distance group
};

/// Deterministic partition: position groups are contiguous and as even as
/// possible; distance groups are contiguous with sizes proportional to
/// 1:2:...:m (last group absorbs the rounding residue); each distance group
/// splits into floor(size / s) contiguous chunks, s = subgroup_size_hint or
/// 5 when the hint is 0, remainder spread one per chunk from the front.
GroupingPlan build_grouping(int n, int K, int m, int subgroup_size_hint = 0);

/// Position aggregates y_i = |mean of x over position group i|, i = 1..m-1.
std::vector<double> aggregate_positions(const GroupingPlan& plan,
                                        std::span<const double> x);

} // namespace etmof
