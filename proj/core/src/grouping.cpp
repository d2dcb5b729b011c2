#include "etmof/grouping.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace etmof {
namespace {

std::vector<int> contiguous(int first, int count) {
  std::vector<int> ids(static_cast<std::size_t>(count));
  std::iota(ids.begin(), ids.end(), first);
  return ids;
}

// Contiguous chunks with the remainder spread one-per-chunk from the front.
std::vector<std::vector<int>> chunk(const std::vector<int>& group, int q) {
  const int sz = static_cast<int>(group.size());
  const int base = sz / q;
  const int extra = sz % q;
  std::vector<std::vector<int>> out;
  int at = 0;
  for (int j = 0; j < q; ++j) {
    const int len = base + (j < extra ? 1 : 0);
    out.emplace_back(group.begin() + at, group.begin() + at + len);
    at += len;
  }
  return out;
}

} // namespace

GroupingPlan build_grouping(int n, int K, int m, int subgroup_size_hint) {
  if (m < 2) throw std::invalid_argument("build_grouping: m must be >= 2");
  if (K < 1 || K >= n) throw std::invalid_argument("build_grouping: need 1 <= K < n");
  if (K < m - 1) {
    throw std::invalid_argument("build_grouping: K must be >= m - 1 (one variable per position group)");
  }
  const int L = n - K;
  if (L < m) throw std::invalid_argument("build_grouping: L must be >= m");

  GroupingPlan plan;
  plan.n = n;
  plan.K = K;
  plan.L = L;
  plan.m = m;

  // Position groups: first K mod (m-1) groups get the ceiling size.
  const int pg = m - 1;
  const int pbase = K / pg;
  const int pextra = K % pg;
  int at = 1;
  for (int i = 0; i < pg; ++i) {
    const int len = pbase + (i < pextra ? 1 : 0);
    plan.position_groups.push_back(contiguous(at, len));
    at += len;
  }

  // Distance groups sized proportionally to the group index.
  const double weight_sum = 0.5 * m * (m + 1);
  std::vector<int> sizes;
  int used = 0;
  for (int i = 1; i < m; ++i) {
    int sz = static_cast<int>(std::llround(static_cast<double>(L) * i / weight_sum));
    sz = std::max(sz, 1);
    sz = std::min(sz, L - used - (m - i)); // leave room for one variable per remaining group
    sizes.push_back(sz);
    used += sz;
  }
  sizes.push_back(L - used);
  at = K + 1;
  for (const int sz : sizes) {
    plan.distance_groups.push_back(contiguous(at, sz));
    at += sz;
  }

  const int s = subgroup_size_hint > 0 ? subgroup_size_hint : 5;
  for (const auto& group : plan.distance_groups) {
    const int q = std::max(1, static_cast<int>(group.size()) / s);
    plan.subgroups.push_back(chunk(group, q));
  }
  return plan;
}

std::vector<double> aggregate_positions(const GroupingPlan& plan,
                                        std::span<const double> x) {
  if (static_cast<int>(x.size()) != plan.n) {
    throw std::invalid_argument("aggregate_positions: |x| must be " + std::to_string(plan.n));
  }
  std::vector<double> y;
  y.reserve(plan.position_groups.size());
  for (const auto& group : plan.position_groups) {
    double s = 0.0;
    for (const int idx : group) s += x[static_cast<std::size_t>(idx - 1)];
    y.push_back(std::fabs(s / static_cast<double>(group.size())));
  }
  return y;
}

} // namespace etmof
