#include "etmof/shape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace etmof {
namespace {

constexpr double kPi = std::numbers::pi;

void check_arity(Shape s, std::span<const double> y, int m, std::optional<double> g) {
  if (m < 2) throw std::invalid_argument("eval_shape: m must be >= 2");
  if (static_cast<int>(y.size()) != m - 1) {
    throw std::invalid_argument("eval_shape: |y| must equal m - 1");
  }
  if ((s == Shape::H1 || s == Shape::H2) && m != 2) {
    throw std::invalid_argument("eval_shape: H1/H2 are two-objective shapes");
  }
  if (shape_needs_g(s) != g.has_value()) {
    throw std::invalid_argument(std::string("eval_shape: ") +
                                std::string(shape_tag(s)) +
                                (shape_needs_g(s) ? " requires g" : " takes no g"));
  }
}

// h_1 = prod cos(a_i); h_k = prod_{i<=m-k} cos(a_i) * sin(a_{m-k+1}) for k >= 2.
std::vector<double> trig_chain(std::span<const double> angles, int m) {
  std::vector<double> h(static_cast<std::size_t>(m));
  std::vector<double> prefix(static_cast<std::size_t>(m));
  prefix[0] = 1.0;
  for (int i = 1; i < m; ++i) prefix[i] = prefix[i - 1] * std::cos(angles[i - 1]);
  h[0] = prefix[m - 1];
  for (int k = 2; k <= m; ++k) {
    h[k - 1] = prefix[m - k] * std::sin(angles[m - k]);
  }
  return h;
}

// Same telescoping structure with cos -> y and sin -> (1 - y).
std::vector<double> linear_chain(std::span<const double> y, int m) {
  std::vector<double> h(static_cast<std::size_t>(m));
  std::vector<double> prefix(static_cast<std::size_t>(m));
  prefix[0] = 1.0;
  for (int i = 1; i < m; ++i) prefix[i] = prefix[i - 1] * y[i - 1];
  h[0] = prefix[m - 1];
  for (int k = 2; k <= m; ++k) {
    h[k - 1] = prefix[m - k] * (1.0 - y[m - k]);
  }
  return h;
}

std::vector<double> half_pi_angles(std::span<const double> y) {
  std::vector<double> a(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) a[i] = 0.5 * kPi * y[i];
  return a;
}

// --- reference front helpers -------------------------------------------

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void das_dennis_rec(int m, int h, int left, std::size_t depth, Objectives& w,
                    std::vector<Objectives>& out) {
  if (depth + 1 == w.size()) {
    w[depth] = static_cast<double>(left) / h;
    out.push_back(w);
    return;
  }
  for (int i = 0; i <= left; ++i) {
    w[depth] = static_cast<double>(i) / h;
    das_dennis_rec(m, h, left - i, depth + 1, w, out);
  }
}

// Inverts the linear chain: returns y with eval_shape(H3, y) == u for a
// simplex point u. Zero prefixes pin the remaining coordinates to 0.
Objectives simplex_to_y(const Objectives& u, int m) {
  Objectives y(static_cast<std::size_t>(m - 1), 0.0);
  y[0] = std::clamp(1.0 - u[static_cast<std::size_t>(m - 1)], 0.0, 1.0);
  double prefix = y[0];
  for (int i = 2; i <= m - 1; ++i) {
    if (prefix <= 0.0) {
      y[i - 1] = 0.0;
      continue;
    }
    y[i - 1] = std::clamp(1.0 - u[static_cast<std::size_t>(m - i)] / prefix, 0.0, 1.0);
    prefix *= y[i - 1];
  }
  return y;
}

std::vector<Objectives> lattice_for_target(int m, int target) {
  int h = 1;
  while (binomial(h + 1 + m - 1, m - 1) <= target) ++h;
  std::vector<Objectives> pts = das_dennis(m, h);
  if (4 * static_cast<long long>(pts.size()) < 3LL * target) {
    // Far short of the target: add an inner layer shrunk toward the center.
    std::vector<Objectives> inner = das_dennis(m, h);
    for (auto& u : inner) {
      for (double& v : u) v = 0.5 * v + 0.5 / m;
    }
    pts.insert(pts.end(), inner.begin(), inner.end());
  }
  return pts;
}

// 1-D staircase of the disconnected front: parameter values t whose
// objective pair (t, -t(1+sin(3*pi*t))) is not dominated by any smaller t.
std::vector<double> h10_optimal_parameters(int grid) {
  const auto u = [](double t) { return t * (1.0 + std::sin(3.0 * kPi * t)); };
  std::vector<double> keep;
  double best = -1.0;
  for (int i = 0; i < grid; ++i) {
    const double t = static_cast<double>(i) / (grid - 1);
    if (u(t) > best) {
      best = u(t);
      keep.push_back(t);
    }
  }
  return keep;
}

std::vector<Objectives> sample_h10(int m, int target) {
  const std::vector<double> optimal = h10_optimal_parameters(4001);
  std::vector<double> values;
  if (m == 2) {
    const std::size_t want = std::min<std::size_t>(optimal.size(),
                                                   static_cast<std::size_t>(target));
    for (std::size_t i = 0; i < want; ++i) {
      values.push_back(optimal[i * (optimal.size() - 1) / std::max<std::size_t>(want - 1, 1)]);
    }
  } else {
    const double per_dim = std::ceil(std::pow(1.2 * target, 1.0 / (m - 1)));
    const std::size_t c =
        std::max<std::size_t>(2, static_cast<std::size_t>(per_dim));
    for (std::size_t i = 0; i < c; ++i) {
      values.push_back(optimal[i * (optimal.size() - 1) / (c - 1)]);
    }
  }
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<Objectives> ys;
  Objectives y(static_cast<std::size_t>(m - 1), 0.0);
  const std::size_t total = [&] {
    std::size_t t = 1;
    for (int i = 0; i < m - 1; ++i) t *= values.size();
    return t;
  }();
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int i = 0; i < m - 1; ++i) {
      y[static_cast<std::size_t>(i)] = values[rest % values.size()];
      rest /= values.size();
    }
    ys.push_back(y);
  }
  // Keep the grid within the size contract before the O(N^2) filter.
  if (ys.size() > static_cast<std::size_t>(2 * target)) {
    std::vector<Objectives> thinned;
    const std::size_t want = static_cast<std::size_t>(1.6 * target);
    for (std::size_t i = 0; i < want; ++i) {
      thinned.push_back(ys[i * (ys.size() - 1) / (want - 1)]);
    }
    ys = std::move(thinned);
  }
  std::vector<Objectives> pts;
  pts.reserve(ys.size());
  for (const auto& yy : ys) pts.push_back(eval_shape(Shape::H10, yy, m, 0.0));
  return nondominated_subset(pts);
}

} // namespace

std::string_view shape_tag(Shape s) {
  static constexpr std::string_view tags[] = {"H1", "H2", "H3", "H4", "H5",
                                              "H6", "H7", "H8", "H9", "H10"};
  return tags[static_cast<int>(s) - 1];
}

bool shape_needs_g(Shape s) { return s == Shape::H8 || s == Shape::H10; }

std::vector<double> eval_shape(Shape s, std::span<const double> y, int m,
                               std::optional<double> g) {
  check_arity(s, y, m, g);
  switch (s) {
    case Shape::H1:
      return {y[0], 1.0 - std::sqrt(y[0])};
    case Shape::H2:
      return {y[0], 1.0 - y[0] * y[0]};
    case Shape::H3:
      return linear_chain(y, m);
    case Shape::H4: {
      std::vector<double> h = linear_chain(y, m);
      for (int k = 0; k < m - 1; ++k) h[k] = 1.0 - h[k];
      h[m - 1] = y[0];
      return h;
    }
    case Shape::H5:
      return trig_chain(half_pi_angles(y), m);
    case Shape::H6: {
      std::vector<double> h = trig_chain(half_pi_angles(y), m);
      for (double& v : h) v = 1.0 - v;
      return h;
    }
    case Shape::H7: {
      std::vector<double> h = trig_chain(half_pi_angles(y), m);
      for (int k = 0; k < m - 1; ++k) h[k] = h[k] * h[k] * h[k] * h[k];
      h[m - 1] *= h[m - 1];
      return h;
    }
    case Shape::H8: {
      std::vector<double> theta(y.size());
      theta[0] = 0.5 * kPi * y[0];
      for (std::size_t i = 1; i < y.size(); ++i) {
        theta[i] = kPi / (4.0 * (1.0 + *g)) * (1.0 + 2.0 * (*g) * y[i]);
      }
      return trig_chain(theta, m);
    }
    case Shape::H9: {
      std::vector<double> theta(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) {
        theta[i] = 0.5 * kPi * (0.5 * y[i] + 0.25);
      }
      return trig_chain(theta, m);
    }
    case Shape::H10: {
      std::vector<double> h(static_cast<std::size_t>(m));
      const double denom = 1.0 + *g;
      double tail = 0.0;
      for (int i = 0; i < m - 1; ++i) {
        h[i] = y[i] / denom;
        tail += y[i] * (1.0 + std::sin(3.0 * kPi * y[i])) / denom;
      }
      h[m - 1] = static_cast<double>(m) - tail;
      return h;
    }
  }
  throw std::invalid_argument("eval_shape: unknown shape id");
}

ReferenceFront make_reference_front(std::vector<Objectives> points,
                                    std::optional<Shape> shape, int m) {
  if (points.empty()) throw std::invalid_argument("make_reference_front: no points");
  ReferenceFront f;
  f.shape = shape;
  f.m = m;
  f.ideal.assign(static_cast<std::size_t>(m), std::numeric_limits<double>::infinity());
  f.nadir.assign(static_cast<std::size_t>(m), -std::numeric_limits<double>::infinity());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != m) {
      throw std::invalid_argument("make_reference_front: point arity mismatch");
    }
    for (int k = 0; k < m; ++k) {
      f.ideal[k] = std::min(f.ideal[k], p[k]);
      f.nadir[k] = std::max(f.nadir[k], p[k]);
    }
  }
  f.points = std::move(points);
  return f;
}

ReferenceFront sample_reference_front(Shape s, int m, int target_count) {
  if (target_count < 100) {
    throw std::invalid_argument("sample_reference_front: target_count must be >= 100");
  }
  if ((s == Shape::H1 || s == Shape::H2) && m != 2) {
    throw std::invalid_argument("sample_reference_front: H1/H2 need m = 2");
  }
  std::vector<Objectives> pts;
  if (s == Shape::H10) {
    pts = sample_h10(m, target_count);
  } else if (s == Shape::H8) {
    // Degenerate curve: only y1 moves the front once g = 0.
    Objectives y(static_cast<std::size_t>(m - 1), 0.5);
    for (int i = 0; i < target_count; ++i) {
      y[0] = static_cast<double>(i) / (target_count - 1);
      pts.push_back(eval_shape(s, y, m, 0.0));
    }
  } else if (m == 2) {
    for (int i = 0; i < target_count; ++i) {
      const double t = static_cast<double>(i) / (target_count - 1);
      pts.push_back(eval_shape(s, std::vector<double>{t}, m));
    }
  } else {
    for (const auto& u : lattice_for_target(m, target_count)) {
      pts.push_back(eval_shape(s, simplex_to_y(u, m), m));
    }
  }
  const auto count = static_cast<long long>(pts.size());
  if (2 * count < target_count || count > 2LL * target_count) {
    throw std::runtime_error("sample_reference_front: sample size out of contract for " +
                             std::string(shape_tag(s)) + " m=" + std::to_string(m));
  }
  return make_reference_front(std::move(pts), s, m);
}

int default_front_size(int m) {
  switch (m) {
    case 2: return 1000;
    case 3: return 990;
    case 5: return 1001;
    case 8: return 1500;
    case 10: return 1500;
    default: return 1000;
  }
}

std::vector<Objectives> das_dennis(int m, int h) {
  std::vector<Objectives> out;
  Objectives w(static_cast<std::size_t>(m), 0.0);
  das_dennis_rec(m, h, h, 0, w, out);
  return out;
}

} // namespace etmof
