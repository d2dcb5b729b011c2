#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace etmof {

using Objectives = std::vector<double>;

/// Weak Pareto dominance for minimization: a <= b in every component and
/// strictly better in at least one.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Indices of the nondominated points of `points` (duplicates all kept).
std::vector<std::size_t> nondominated_indices(const std::vector<Objectives>& points);

std::vector<Objectives> nondominated_subset(const std::vector<Objectives>& points);

/// NSGA-II style fast nondominated sorting; returns the front index (rank,
/// 0 = best) of every point.
std::vector<int> nondominated_ranks(const std::vector<Objectives>& points);

/// Crowding distances of the subset `members` of `points`; boundary points
/// get +infinity. Result is aligned with `members`.
std::vector<double> crowding_distances(const std::vector<Objectives>& points,
                                       const std::vector<std::size_t>& members);

/// Accumulating nondominated archive with a crowding-based size cap.
/// Insertion keeps the invariant that members are mutually nondominated;
/// a candidate dominated by (or equal to) any member is rejected, and a
/// accepted candidate evicts everything it dominates.
class ParetoArchive {
public:
  explicit ParetoArchive(std::size_t cap) : cap_(cap) {}

  bool insert(Objectives point);
  void clear() { points_.clear(); }

  const std::vector<Objectives>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t capacity() const { return cap_; }

private:
  void prune();

  std::size_t cap_;
  std::vector<Objectives> points_;
};

} // namespace etmof
