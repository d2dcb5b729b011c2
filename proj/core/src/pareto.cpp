#include "etmof/pareto.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace etmof {

bool dominates(std::span<const double> a, std::span<const double> b) {
  bool strictly = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
    if (a[k] < b[k]) strictly = true;
  }
  return strictly;
}

std::vector<std::size_t> nondominated_indices(const std::vector<Objectives>& points) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      if (j != i && dominates(points[j], points[i])) dominated = true;
    }
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

std::vector<Objectives> nondominated_subset(const std::vector<Objectives>& points) {
  std::vector<Objectives> out;
  for (const std::size_t i : nondominated_indices(points)) out.push_back(points[i]);
  return out;
}

std::vector<int> nondominated_ranks(const std::vector<Objectives>& points) {
  const std::size_t n = points.size();
  std::vector<int> rank(n, -1);
  std::vector<int> dom_count(n, 0);
  std::vector<std::vector<std::size_t>> dominated_by(n);
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates(points[i], points[j])) {
        dominated_by[i].push_back(j);
        ++dom_count[j];
      } else if (dominates(points[j], points[i])) {
        dominated_by[j].push_back(i);
        ++dom_count[i];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dom_count[i] == 0) {
      rank[i] = 0;
      current.push_back(i);
    }
  }
  int level = 0;
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (const std::size_t i : current) {
      for (const std::size_t j : dominated_by[i]) {
        if (--dom_count[j] == 0) {
          rank[j] = level + 1;
          next.push_back(j);
        }
      }
    }
    current = std::move(next);
    ++level;
  }
  return rank;
}

std::vector<double> crowding_distances(const std::vector<Objectives>& points,
                                       const std::vector<std::size_t>& members) {
  const std::size_t n = members.size();
  std::vector<double> dist(n, 0.0);
  if (n == 0) return dist;
  const std::size_t m = points[members[0]].size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (n <= 2) {
    std::fill(dist.begin(), dist.end(), inf);
    return dist;
  }
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < m; ++k) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return points[members[a]][k] < points[members[b]][k];
    });
    const double lo = points[members[order.front()]][k];
    const double hi = points[members[order.back()]][k];
    dist[order.front()] = inf;
    dist[order.back()] = inf;
    const double range = hi - lo;
    if (range <= 0.0) continue;
    for (std::size_t p = 1; p + 1 < n; ++p) {
      if (dist[order[p]] == inf) continue;
      dist[order[p]] +=
          (points[members[order[p + 1]]][k] - points[members[order[p - 1]]][k]) / range;
    }
  }
  return dist;
}

bool ParetoArchive::insert(Objectives point) {
  for (const auto& p : points_) {
    if (dominates(p, point) || p == point) return false;
  }
  std::erase_if(points_, [&](const Objectives& p) { return dominates(point, p); });
  points_.push_back(std::move(point));
  if (points_.size() > cap_) prune();
  return true;
}

void ParetoArchive::prune() {
  // Drop the most crowded point until back under the cap.
  while (points_.size() > cap_) {
    std::vector<std::size_t> all(points_.size());
    std::iota(all.begin(), all.end(), 0);
    const std::vector<double> d = crowding_distances(points_, all);
    const std::size_t worst =
        static_cast<std::size_t>(std::min_element(d.begin(), d.end()) - d.begin());
    points_.erase(points_.begin() + static_cast<std::ptrdiff_t>(worst));
  }
}

} // namespace etmof
