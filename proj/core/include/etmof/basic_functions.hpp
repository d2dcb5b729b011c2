#pragma once

#include <span>
#include <string_view>

namespace etmof {

/// The 14 single-objective component functions used to build landscapes.
/// Ordinals follow the b1..b14 naming used throughout the suite catalog.
enum class BasicFn : int {
  Sphere = 1,
  Elliptic = 2,
  BentCigar = 3,
  Discus = 4,
  Rosenbrock = 5,
  Ackley = 6,
  Weierstrass = 7,
  Griewank = 8,
  Rastrigin = 9,
  ModSchwefel = 10,
  Katsuura = 11,
  HappyCat = 12,
  ExpGriewRosen = 13,
  AbsMean = 14,
};

inline constexpr int kBasicFnCount = 14;

BasicFn basic_fn_from_ordinal(int ordinal); // 1..14
int basic_fn_ordinal(BasicFn fn);
std::string_view basic_fn_tag(BasicFn fn); // "b1".."b14"

/// Coordinate of the minimizer, identical in every dimension
/// (1 for the Rosenbrock family, -1 for HappyCat, 0 otherwise).
double basic_fn_minimizer(BasicFn fn);

/// Evaluates fn on x. Throws std::invalid_argument for an empty vector,
/// NaN input, or a Rosenbrock-family call with fewer than two elements.
/// Inputs are evaluated as-is; out-of-box values are not clamped.
double eval_basic(BasicFn fn, std::span<const double> x);

} // namespace etmof
