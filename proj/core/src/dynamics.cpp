#include "etmof/dynamics.hpp"

#include <algorithm>
#include <functional>
#include <vector>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "etmof/suite.hpp"

namespace etmof {
namespace {

constexpr double kPi = std::numbers::pi;

double sin_half_pi(double t) { return std::sin(0.5 * kPi * t); }

std::span<const double> distance_part(std::span<const double> x, int K) {
  return x.subspan(static_cast<std::size_t>(K));
}

std::vector<double> shifted(std::span<const double> xd, double shift) {
  std::vector<double> z(xd.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = xd[i] - shift;
  return z;
}

double sum_sq_to(std::span<const double> xd, double target) {
  double s = 0.0;
  for (const double v : xd) {
    const double d = v - target;
    s += d * d;
  }
  return s;
}

// g core of the DF6 template: |G|-weighted Rastrigin-like sum over x^d - G.
double weighted_rastrigin(std::span<const double> xd, double G) {
  double s = 0.0;
  for (const double v : xd) {
    const double y = v - G;
    s += std::fabs(G) * y * y - 10.0 * std::cos(2.0 * kPi * y) + 10.0;
  }
  return s;
}

// Box-constrained minimum of a shifted basic core, used when the
// unconstrained minimizer leaves the feasible interval (Rosenbrock with a
// positive shift). Deterministic cyclic coordinate descent with a coarse
// scan plus golden-section refinement per coordinate.
double box_min_basic(BasicFn fn, double shift, double lo, double hi, int len) {
  const double zlo = lo - shift;
  const double zhi = hi - shift;
  const double opt = basic_fn_minimizer(fn);
  if (opt >= zlo && opt <= zhi) return 0.0;

  std::vector<double> z(static_cast<std::size_t>(len), std::clamp(opt, zlo, zhi));
  const auto total = [&] { return eval_basic(fn, z); };
  constexpr double golden = 0.6180339887498949;
  double best = total();
  for (int sweep = 0; sweep < 400; ++sweep) {
    for (int i = 0; i < len; ++i) {
      const double keep = z[static_cast<std::size_t>(i)];
      // Coarse scan.
      double best_v = keep;
      double best_f = best;
      for (int s = 0; s <= 64; ++s) {
        const double v = zlo + (zhi - zlo) * s / 64.0;
        z[static_cast<std::size_t>(i)] = v;
        const double f = total();
        if (f < best_f) {
          best_f = f;
          best_v = v;
        }
      }
      // Golden-section refinement around the scan winner.
      double a = std::max(zlo, best_v - (zhi - zlo) / 64.0);
      double b = std::min(zhi, best_v + (zhi - zlo) / 64.0);
      for (int it = 0; it < 40; ++it) {
        const double c = b - golden * (b - a);
        const double d = a + golden * (b - a);
        z[static_cast<std::size_t>(i)] = c;
        const double fc = total();
        z[static_cast<std::size_t>(i)] = d;
        const double fd = total();
        if (fc < fd) {
          b = d;
        } else {
          a = c;
        }
      }
      z[static_cast<std::size_t>(i)] = 0.5 * (a + b);
      const double f = total();
      if (f > best) z[static_cast<std::size_t>(i)] = keep;
      best = std::min(best, f);
    }
    const double after = total();
    if (best - after < 1e-13 && sweep > 2) break;
    best = after;
  }
  return best;
}

ReferenceFront curve_front(std::vector<Objectives> pts, int m) {
  return make_reference_front(std::move(pts), std::nullopt, m);
}

// ---- per-family objective evaluation -----------------------------------

Objectives eval_dmop2(const TaskSpec& task, std::span<const double> x, double t) {
  const double xp = x[0];
  const double G = std::fabs(sin_half_pi(t));
  const double H = 0.75 * sin_half_pi(t) + 1.25;
  const double g = sum_sq_to(distance_part(x, task.K), G);
  const double f1 = xp;
  const double f2 = (1.0 + g) * (1.0 - std::pow(f1 / (1.0 + g), H));
  return {f1, f2};
}

Objectives eval_zjz(const TaskSpec& task, std::span<const double> x, double t) {
  const double xp = x[0];
  const double G = sin_half_pi(t);
  const double H = 1.5 + G;
  const double g = sum_sq_to(distance_part(x, task.K), G + std::pow(xp, H));
  const double f1 = xp;
  const double f2 = (1.0 + g) * (1.0 - std::pow(f1 / (1.0 + g), H));
  return {f1, f2};
}

Objectives eval_df2(const TaskSpec& task, std::span<const double> x, double t) {
  const int n = task.n;
  const double G = std::fabs(sin_half_pi(t));
  const int r = std::min(n, 1 + static_cast<int>(std::floor((n - 1) * G)));
  const double f1 = x[static_cast<std::size_t>(r - 1)];
  double g = 0.0;
  const bool rastrigin = task.dynamics->g_core == BasicFn::Rastrigin;
  for (int i = 0; i < n; ++i) {
    if (i == r - 1) continue;
    const double y = x[static_cast<std::size_t>(i)] - G;
    g += rastrigin ? y * y - 10.0 * std::cos(2.0 * kPi * y) + 10.0 : y * y;
  }
  const double f2 = (1.0 + g) * (1.0 - std::sqrt(f1 / (1.0 + g)));
  return {f1, f2};
}

Objectives eval_df5(const TaskSpec& task, std::span<const double> x, double t) {
  const double xp = x[0];
  const double G = sin_half_pi(t);
  const double wt = std::floor(10.0 * G);
  const double core = eval_basic(task.dynamics->g_core, shifted(distance_part(x, task.K), G));
  const double bump = 0.02 * std::sin(wt * kPi * xp);
  return {(1.0 + core) * (xp + bump), (1.0 + core) * (1.0 - xp + bump)};
}

Objectives eval_df6(const TaskSpec& task, std::span<const double> x, double t) {
  const double xp = x[0];
  const double G = sin_half_pi(t);
  const double alpha = 0.2 + 0.28 * std::fabs(G);
  const std::span<const double> xd = distance_part(x, task.K);
  const double core = task.dynamics->g_time_weighted
                          ? weighted_rastrigin(xd, G)
                          : eval_basic(task.dynamics->g_core, shifted(xd, G));
  const double bump = 0.1 * std::sin(3.0 * kPi * xp);
  return {(1.0 + core) * std::pow(xp + bump, alpha),
          (1.0 + core) * std::pow(1.0 - xp + bump, alpha)};
}

Objectives eval_df8(const TaskSpec& task, std::span<const double> x, double t) {
  const double xp = x[0];
  const double G = sin_half_pi(t);
  const double alpha = 2.25 + 2.0 * std::cos(2.0 * kPi * t);
  const double beta = 100.0 * G * G;
  const double target = G * std::sin(4.0 * kPi * std::pow(xp, beta)) / (1.0 + std::fabs(G));
  const double core = sum_sq_to(distance_part(x, task.K), target);
  const double bump = 0.1 * std::sin(3.0 * kPi * xp);
  return {(1.0 + core) * (xp + bump),
          (1.0 + core) * std::pow(1.0 - xp + bump, alpha)};
}

Objectives eval_df10(const TaskSpec& task, std::span<const double> x, double t) {
  const double a = x[0];
  const double b = x[1];
  const double G = sin_half_pi(t);
  const double H = 2.25 + 2.0 * std::cos(0.5 * kPi * t);
  const double target = std::sin(2.0 * kPi * (a + b)) / (1.0 + std::fabs(G));
  const double g = sum_sq_to(distance_part(x, task.K), target);
  const double s1 = std::sin(0.5 * kPi * a);
  const double c1 = std::cos(0.5 * kPi * a);
  const double s2 = std::sin(0.5 * kPi * b);
  const double c2 = std::cos(0.5 * kPi * b);
  return {(1.0 + g) * std::pow(s1, H), (1.0 + g) * std::pow(s2 * c1, H),
          (1.0 + g) * std::pow(c2 * c1, H)};
}

Objectives eval_df11(const TaskSpec& task, std::span<const double> x, double t) {
  const double G = std::fabs(sin_half_pi(t));
  const double z1 = kPi / 6.0 * G + (kPi / 2.0 - kPi / 3.0 * G) * x[0];
  const double z2 = kPi / 6.0 * G + (kPi / 2.0 - kPi / 3.0 * G) * x[1];
  const double g = G + sum_sq_to(distance_part(x, task.K), 0.5 * G * x[0]);
  return {(1.0 + g) * std::sin(z1), (1.0 + g) * std::sin(z2) * std::cos(z1),
          (1.0 + g) * std::cos(z2) * std::cos(z1)};
}

double df12_discontinuity(double xp1, double xp2, double t) {
  const double kt = 10.0 * std::sin(kPi * t);
  const double p1 = std::sin(std::floor(kt * (2.0 * xp1 - 1.0)) * kPi / 2.0);
  const double p2 = std::sin(std::floor(kt * (2.0 * xp2 - 1.0)) * kPi / 2.0);
  return std::fabs(p1 * p2);
}

Objectives eval_df12(const TaskSpec& task, std::span<const double> x, double t) {
  const double a = x[0];
  const double b = x[1];
  const double g =
      sum_sq_to(distance_part(x, task.K), std::sin(t * a)) + df12_discontinuity(a, b, t);
  const double ca = std::cos(0.5 * kPi * a);
  const double sa = std::sin(0.5 * kPi * a);
  const double cb = std::cos(0.5 * kPi * b);
  const double sb = std::sin(0.5 * kPi * b);
  return {(1.0 + g) * ca * cb, (1.0 + g) * ca * sb, (1.0 + g) * sa};
}

// ---- per-family true fronts at time t -----------------------------------

ReferenceFront front_power_curve(double H, int count, int m) {
  // f1 = s, f2 = 1 - s^H over the unit interval.
  std::vector<Objectives> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double s = static_cast<double>(i) / (count - 1);
    pts.push_back({s, 1.0 - std::pow(s, H)});
  }
  return curve_front(std::move(pts), m);
}

double df5_core_min(const TaskSpec& task, double t) {
  const double G = sin_half_pi(t);
  const BasicFn fn = task.dynamics->g_core;
  const std::size_t last = static_cast<std::size_t>(task.n - 1);
  return box_min_basic(fn, G, task.lower[last], task.upper[last], task.L);
}

ReferenceFront df5_front(const TaskSpec& task, double t, int count) {
  const double G = sin_half_pi(t);
  const double wt = std::floor(10.0 * G);
  const double scale = 1.0 + df5_core_min(task, t);
  std::vector<Objectives> pts;
  for (int i = 0; i < count; ++i) {
    const double s = static_cast<double>(i) / (count - 1);
    const double bump = 0.02 * std::sin(wt * kPi * s);
    pts.push_back({scale * (s + bump), scale * (1.0 - s + bump)});
  }
  return curve_front(std::move(pts), 2);
}

ReferenceFront df6_front(const TaskSpec& task, double t, int count) {
  const double G = sin_half_pi(t);
  const double alpha = 0.2 + 0.28 * std::fabs(G);
  const double scale =
      task.dynamics->g_time_weighted ? 1.0 : 1.0 + df5_core_min(task, t);
  std::vector<Objectives> pts;
  for (int i = 0; i < count; ++i) {
    const double s = static_cast<double>(i) / (count - 1);
    const double bump = 0.1 * std::sin(3.0 * kPi * s);
    pts.push_back({scale * std::pow(s + bump, alpha),
                   scale * std::pow(1.0 - s + bump, alpha)});
  }
  return curve_front(std::move(pts), 2);
}

ReferenceFront df8_front(double t, int count) {
  const double alpha = 2.25 + 2.0 * std::cos(2.0 * kPi * t);
  std::vector<Objectives> pts;
  for (int i = 0; i < count; ++i) {
    const double s = static_cast<double>(i) / (count - 1);
    const double bump = 0.1 * std::sin(3.0 * kPi * s);
    pts.push_back({s + bump, std::pow(1.0 - s + bump, alpha)});
  }
  return curve_front(std::move(pts), 2);
}

// Position-parameter grid for the 3-objective families, dominance-filtered.
ReferenceFront surface_front(int count,
                             const std::function<Objectives(double, double)>& map) {
  const int side = std::max(8, static_cast<int>(std::ceil(std::sqrt(1.7 * count))));
  std::vector<Objectives> pts;
  pts.reserve(static_cast<std::size_t>(side) * side);
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      pts.push_back(map(static_cast<double>(i) / (side - 1),
                        static_cast<double>(j) / (side - 1)));
    }
  }
  std::vector<Objectives> front = nondominated_subset(pts);
  if (front.size() > static_cast<std::size_t>(2 * count)) {
    std::vector<Objectives> thinned;
    const std::size_t want = static_cast<std::size_t>(1.5 * count);
    for (std::size_t i = 0; i < want; ++i) {
      thinned.push_back(front[i * (front.size() - 1) / (want - 1)]);
    }
    front = std::move(thinned);
  }
  return curve_front(std::move(front), 3);
}

} // namespace

std::string DynamicsSpec::label() const {
  switch (family) {
    case DynamicFamily::DMOP2: return "dMOP2";
    case DynamicFamily::ZJZ: return "ZJZ";
    case DynamicFamily::DF2:
      return g_core == BasicFn::Sphere ? "DF2" : "DF2/b9";
    case DynamicFamily::DF5:
      return g_core == BasicFn::Sphere ? "DF5"
                                       : "DF5/" + std::string(basic_fn_tag(g_core));
    case DynamicFamily::DF6:
      return g_time_weighted ? "DF6w" : "DF6/" + std::string(basic_fn_tag(g_core));
    case DynamicFamily::DF8: return "DF8";
    case DynamicFamily::DF10: return "DF10";
    case DynamicFamily::DF11: return "DF11";
    case DynamicFamily::DF12: return "DF12";
  }
  return "?";
}

TimeInstant time_instant(long tau, const DynamicsSpec& spec) {
  if (tau < 0) throw std::invalid_argument("time_instant: tau must be >= 0");
  TimeInstant ti;
  ti.tau = tau;
  ti.change_index = tau / spec.frequency;
  ti.t = static_cast<double>(ti.change_index) / spec.severity;
  return ti;
}

Objectives evaluate_dynamic(const TaskSpec& task, std::span<const double> x, double t) {
  if (!task.is_dynamic()) {
    throw std::invalid_argument("evaluate_dynamic: task is not dynamic");
  }
  if (static_cast<int>(x.size()) != task.n) {
    throw std::invalid_argument("evaluate_dynamic: |x| mismatch");
  }
  switch (task.dynamics->family) {
    case DynamicFamily::DMOP2: return eval_dmop2(task, x, t);
    case DynamicFamily::ZJZ: return eval_zjz(task, x, t);
    case DynamicFamily::DF2: return eval_df2(task, x, t);
    case DynamicFamily::DF5: return eval_df5(task, x, t);
    case DynamicFamily::DF6: return eval_df6(task, x, t);
    case DynamicFamily::DF8: return eval_df8(task, x, t);
    case DynamicFamily::DF10: return eval_df10(task, x, t);
    case DynamicFamily::DF11: return eval_df11(task, x, t);
    case DynamicFamily::DF12: return eval_df12(task, x, t);
  }
  throw std::invalid_argument("evaluate_dynamic: unknown family");
}

ReferenceFront dynamic_front(const TaskSpec& task, double t, int target_count) {
  if (!task.is_dynamic()) {
    throw std::invalid_argument("dynamic_front: task is not dynamic");
  }
  const int count = std::max(target_count, 100);
  switch (task.dynamics->family) {
    case DynamicFamily::DMOP2:
      return front_power_curve(0.75 * sin_half_pi(t) + 1.25, count, 2);
    case DynamicFamily::ZJZ:
      return front_power_curve(1.5 + sin_half_pi(t), count, 2);
    case DynamicFamily::DF2:
      return front_power_curve(0.5, count, 2); // f2 = 1 - sqrt(f1), any t
    case DynamicFamily::DF5:
      return df5_front(task, t, count);
    case DynamicFamily::DF6:
      return df6_front(task, t, count);
    case DynamicFamily::DF8:
      return df8_front(t, count);
    case DynamicFamily::DF10: {
      const double H = 2.25 + 2.0 * std::cos(0.5 * kPi * t);
      return surface_front(count, [H](double a, double b) -> Objectives {
        const double s1 = std::sin(0.5 * kPi * a);
        const double c1 = std::cos(0.5 * kPi * a);
        const double s2 = std::sin(0.5 * kPi * b);
        const double c2 = std::cos(0.5 * kPi * b);
        return {std::pow(s1, H), std::pow(s2 * c1, H), std::pow(c2 * c1, H)};
      });
    }
    case DynamicFamily::DF11: {
      const double G = std::fabs(sin_half_pi(t));
      const double scale = 1.0 + G; // g attains G on the front
      return surface_front(count, [G, scale](double a, double b) -> Objectives {
        const double z1 = kPi / 6.0 * G + (kPi / 2.0 - kPi / 3.0 * G) * a;
        const double z2 = kPi / 6.0 * G + (kPi / 2.0 - kPi / 3.0 * G) * b;
        return {scale * std::sin(z1), scale * std::sin(z2) * std::cos(z1),
                scale * std::cos(z2) * std::cos(z1)};
      });
    }
    case DynamicFamily::DF12: {
      return surface_front(count, [t](double a, double b) -> Objectives {
        const double g = df12_discontinuity(a, b, t);
        const double ca = std::cos(0.5 * kPi * a);
        const double sa = std::sin(0.5 * kPi * a);
        const double cb = std::cos(0.5 * kPi * b);
        const double sb = std::sin(0.5 * kPi * b);
        return {(1.0 + g) * ca * cb, (1.0 + g) * ca * sb, (1.0 + g) * sa};
      });
    }
  }
  throw std::invalid_argument("dynamic_front: unknown family");
}

} // namespace etmof
