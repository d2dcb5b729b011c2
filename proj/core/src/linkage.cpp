#include "etmof/linkage.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace etmof {
namespace {

constexpr double kPi = std::numbers::pi;

void check_slice(LinkageFn fn, const IndexedSlice& xd) {
  if (xd.values.empty()) {
    throw std::invalid_argument("eval_linkage: empty slice");
  }
  if (xd.values.size() != xd.global_index.size()) {
    throw std::invalid_argument("eval_linkage: values/global_index length mismatch");
  }
  const bool fractional = fn == LinkageFn::L2 || fn == LinkageFn::L3 || fn == LinkageFn::L8;
  if (fractional && xd.n_total < 3) {
    throw std::invalid_argument("eval_linkage: L2/L3/L8 need n_total >= 3");
  }
}

// Exponent of the y1 power target shared by L2/L3/L8.
double power_exponent(int idx, int n) {
  return 0.5 * (1.0 + 3.0 * (static_cast<double>(idx) - 2.0) / (static_cast<double>(n) - 2.0));
}

} // namespace

std::string_view linkage_fn_tag(LinkageFn fn) {
  static constexpr std::string_view tags[] = {"L1", "L2", "L3", "L4",
                                              "L5", "L6", "L7", "L8"};
  return tags[static_cast<int>(fn) - 1];
}

double linkage_target(LinkageFn fn, int idx, int n, double y1, double y2) {
  const double di = static_cast<double>(idx);
  const double dn = static_cast<double>(n);
  switch (fn) {
    case LinkageFn::L1:
      return (0.3 * y1 * y1 * std::cos(24.0 * kPi * y1 + 4.0 * di * kPi / dn) + 0.6 * y1) *
             std::sin(6.0 * kPi * y1 + di * kPi / dn);
    case LinkageFn::L2:
    case LinkageFn::L3:
    case LinkageFn::L8:
      return std::pow(y1, power_exponent(idx, n));
    case LinkageFn::L4:
      return 0.8 * y1 * std::cos(6.0 * kPi * y1 + di * kPi / dn);
    case LinkageFn::L5:
      return 0.8 * y1 * std::sin(6.0 * kPi * y1 + di * kPi / dn);
    case LinkageFn::L6:
      return 2.0 * y2 * std::sin(2.0 * kPi * y1 + di * kPi / dn);
    case LinkageFn::L7:
      return std::sin(6.0 * kPi * y1 + di * kPi / dn);
  }
  throw std::invalid_argument("linkage_target: unknown function id");
}

double eval_linkage(LinkageFn fn, const IndexedSlice& xd, double y1,
                    std::optional<double> y2) {
  check_slice(fn, xd);
  if (fn == LinkageFn::L6 && !y2.has_value()) {
    throw std::invalid_argument("eval_linkage: L6 requires y2");
  }
  const double y2v = y2.value_or(0.0);
  const std::size_t len = xd.values.size();
  const double w = 2.0 / static_cast<double>(len);

  switch (fn) {
    case LinkageFn::L1:
    case LinkageFn::L2:
    case LinkageFn::L4:
    case LinkageFn::L5:
    case LinkageFn::L6:
    case LinkageFn::L7: {
      double s = 0.0;
      for (std::size_t j = 0; j < len; ++j) {
        const double d =
            xd.values[j] - linkage_target(fn, xd.global_index[j], xd.n_total, y1, y2v);
        s += d * d;
      }
      return w * s;
    }
    case LinkageFn::L3: {
      double sq = 0.0;
      double prod = 1.0;
      for (std::size_t j = 0; j < len; ++j) {
        const double d =
            xd.values[j] - linkage_target(fn, xd.global_index[j], xd.n_total, y1, y2v);
        sq += d * d;
        prod *= std::cos(20.0 * kPi * d / std::sqrt(static_cast<double>(xd.global_index[j])));
      }
      return w * (4.0 * sq - 2.0 * prod + 2.0);
    }
    case LinkageFn::L8: {
      double s = 0.0;
      for (std::size_t j = 0; j < len; ++j) {
        const double d =
            xd.values[j] - linkage_target(fn, xd.global_index[j], xd.n_total, y1, y2v);
        s += 4.0 * d * d - std::cos(8.0 * kPi * d) + 1.0;
      }
      return w * s;
    }
  }
  throw std::invalid_argument("eval_linkage: unknown function id");
}

std::vector<double> apply_linkage_operator(LgOperator op, const IndexedSlice& xd,
                                           double y1, std::span<const double> lo,
                                           std::span<const double> hi) {
  if (op == LgOperator::None) {
    return std::vector<double>(xd.values.begin(), xd.values.end());
  }
  if (xd.values.size() != xd.global_index.size() || lo.size() != xd.values.size() ||
      hi.size() != xd.values.size()) {
    throw std::invalid_argument("apply_linkage_operator: shape mismatch");
  }
  const double dn = static_cast<double>(xd.n_total);
  std::vector<double> z(xd.values.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    const double di = static_cast<double>(xd.global_index[j]);
    const double scale = op == LgOperator::Lg1
                             ? 1.0 + di / dn
                             : 1.0 + std::cos(0.5 * kPi * di / dn);
    z[j] = scale * xd.values[j] - y1 * (hi[j] - lo[j]);
  }
  return z;
}

} // namespace etmof
