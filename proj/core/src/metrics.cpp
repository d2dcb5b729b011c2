#include "etmof/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace etmof {

double igd(const std::vector<Objectives>& obtained, const ReferenceFront& reference,
           IgdDistance distance) {
  if (obtained.empty()) throw std::invalid_argument("igd: empty obtained set");
  if (reference.points.empty()) throw std::invalid_argument("igd: empty reference front");
  const int m = reference.m;

  std::vector<double> span(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double d = reference.nadir[k] - reference.ideal[k];
    span[k] = d > 1e-12 ? d : 1.0;
  }
  const auto normalized = [&](const Objectives& p, int k) {
    return (p[static_cast<std::size_t>(k)] - reference.ideal[static_cast<std::size_t>(k)]) /
           span[static_cast<std::size_t>(k)];
  };

  double total = 0.0;
  for (const Objectives& ref : reference.points) {
    double best = std::numeric_limits<double>::infinity();
    for (const Objectives& got : obtained) {
      double d = 0.0;
      if (distance == IgdDistance::Manhattan) {
        for (int k = 0; k < m; ++k) d += std::fabs(normalized(ref, k) - normalized(got, k));
      } else {
        for (int k = 0; k < m; ++k) {
          const double e = normalized(ref, k) - normalized(got, k);
          d += e * e;
        }
        d = std::sqrt(d);
      }
      best = std::min(best, d);
      if (best == 0.0) break;
    }
    total += best;
  }
  return total / static_cast<double>(reference.points.size());
}

double migd(std::span<const double> per_change_igd, int expected_changes) {
  if (per_change_igd.empty()) throw std::invalid_argument("migd: empty series");
  if (static_cast<int>(per_change_igd.size()) != expected_changes) {
    throw std::invalid_argument("migd: series length does not match the declared change count");
  }
  double s = 0.0;
  for (const double v : per_change_igd) s += v;
  return s / static_cast<double>(per_change_igd.size());
}

std::vector<std::vector<double>> mean_standard_scores(
    const std::vector<std::vector<std::vector<double>>>& values) {
  if (values.empty() || values[0].empty() || values[0][0].empty()) {
    throw std::invalid_argument("mean_standard_scores: empty input");
  }
  const std::size_t tasks = values[0][0].size();
  std::size_t samples = 0;
  for (const auto& opt : values) {
    for (const auto& run : opt) {
      if (run.size() != tasks) {
        throw std::invalid_argument("mean_standard_scores: ragged task axis");
      }
      ++samples;
    }
  }
  if (samples < 2) {
    throw std::invalid_argument("mean_standard_scores: need at least two optimizer-runs");
  }

  std::vector<double> mu(tasks, 0.0);
  std::vector<double> sigma(tasks, 0.0);
  for (std::size_t i = 0; i < tasks; ++i) {
    double s = 0.0;
    for (const auto& opt : values) {
      for (const auto& run : opt) s += run[i];
    }
    mu[i] = s / static_cast<double>(samples);
    double v = 0.0;
    for (const auto& opt : values) {
      for (const auto& run : opt) {
        const double d = run[i] - mu[i];
        v += d * d;
      }
    }
    sigma[i] = std::sqrt(v / static_cast<double>(samples)); // population std
  }

  std::vector<std::vector<double>> scores(values.size());
  for (std::size_t o = 0; o < values.size(); ++o) {
    scores[o].resize(values[o].size());
    for (std::size_t r = 0; r < values[o].size(); ++r) {
      double s = 0.0;
      for (std::size_t i = 0; i < tasks; ++i) {
        if (sigma[i] >= 1e-12) s += (values[o][r][i] - mu[i]) / sigma[i];
      }
      scores[o][r] = s / static_cast<double>(tasks);
    }
  }
  return scores;
}

} // namespace etmof
