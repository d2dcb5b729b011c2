#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <vector>

#include "etmof/basic_functions.hpp"
#include "etmof/rng.hpp"

using namespace etmof;

namespace {

std::vector<double> constant_vec(std::size_t n, double v) {
  return std::vector<double>(n, v);
}

const BasicFn kAll[] = {
    BasicFn::Sphere,      BasicFn::Elliptic, BasicFn::BentCigar, BasicFn::Discus,
    BasicFn::Rosenbrock,  BasicFn::Ackley,   BasicFn::Weierstrass,
    BasicFn::Griewank,    BasicFn::Rastrigin, BasicFn::ModSchwefel,
    BasicFn::Katsuura,    BasicFn::HappyCat, BasicFn::ExpGriewRosen, BasicFn::AbsMean};

} // namespace

TEST_CASE("known minima at known minimizers") {
  CHECK(eval_basic(BasicFn::Sphere, constant_vec(3, 0.0)) == 0.0);
  CHECK(eval_basic(BasicFn::Rosenbrock, constant_vec(3, 1.0)) == 0.0);
  CHECK(eval_basic(BasicFn::Ackley, constant_vec(2, 0.0)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eval_basic(BasicFn::Weierstrass, constant_vec(1, 0.0)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  for (std::size_t n = 2; n <= 10; ++n) {
    CHECK(std::fabs(eval_basic(BasicFn::HappyCat, constant_vec(n, -1.0))) < 1e-12);
  }
  // The offset constant puts the Schwefel optimum at the origin; checked
  // against a direct evaluation of the inner term at z = 420.9687462275036.
  const double z = 4.209687462275036e2;
  const double u = z * std::sin(std::sqrt(z));
  CHECK(std::fabs(eval_basic(BasicFn::ModSchwefel, constant_vec(2, 0.0)) -
                  2.0 * (418.9828872724338 - u)) < 1e-12);
  CHECK(std::fabs(eval_basic(BasicFn::ModSchwefel, constant_vec(2, 0.0))) < 1e-4);

  for (const BasicFn fn : kAll) {
    const std::size_t n = 8;
    const double tol = fn == BasicFn::ModSchwefel ? 1e-4 : 1e-9;
    CHECK(std::fabs(eval_basic(fn, constant_vec(n, basic_fn_minimizer(fn)))) < tol);
  }
}

TEST_CASE("nonnegativity over a random sweep") {
  const BasicFn fns[] = {BasicFn::Sphere,     BasicFn::Elliptic, BasicFn::BentCigar,
                         BasicFn::Discus,     BasicFn::Rosenbrock, BasicFn::Ackley,
                         BasicFn::Griewank,   BasicFn::Rastrigin, BasicFn::Katsuura};
  SplitMix64 rng(11);
  std::vector<double> x(10);
  for (int s = 0; s < 1000; ++s) {
    for (double& v : x) v = rng.next_in(-100.0, 100.0);
    for (const BasicFn fn : fns) CHECK(eval_basic(fn, x) >= 0.0);
  }
}

TEST_CASE("minimizer is a local minimum under small perturbations") {
  SplitMix64 rng(23);
  std::vector<double> x(6), xp(6);
  for (const BasicFn fn : kAll) {
    const double star = basic_fn_minimizer(fn);
    std::fill(x.begin(), x.end(), star);
    const double f0 = eval_basic(fn, x);
    for (int trial = 0; trial < 100; ++trial) {
      double norm = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        xp[j] = rng.next_in(-1.0, 1.0);
        norm += xp[j] * xp[j];
      }
      norm = std::sqrt(norm);
      const double radius = 0.1 * rng.next_double();
      for (std::size_t j = 0; j < x.size(); ++j) xp[j] = star + xp[j] / norm * radius;
      CHECK(eval_basic(fn, xp) >= f0 - 1e-12);
    }
  }
}

TEST_CASE("separable functions are permutation invariant") {
  // Griewank is excluded: its product term weights each coordinate by
  // 1/sqrt(i), so it is not symmetric despite being quasi-separable.
  const BasicFn fns[] = {BasicFn::Sphere, BasicFn::Ackley, BasicFn::Rastrigin,
                         BasicFn::AbsMean};
  SplitMix64 rng(31);
  std::vector<double> x(7);
  for (int s = 0; s < 100; ++s) {
    for (double& v : x) v = rng.next_in(-5.0, 5.0);
    std::vector<double> shuffled = x;
    for (std::size_t j = shuffled.size(); j > 1; --j) {
      std::swap(shuffled[j - 1], shuffled[rng.next_below(j)]);
    }
    for (const BasicFn fn : fns) {
      CHECK(eval_basic(fn, x) == doctest::Approx(eval_basic(fn, shuffled)).epsilon(1e-12));
    }
  }
}

TEST_CASE("expanded Griewank-Rosenbrock is invariant under cyclic shifts") {
  SplitMix64 rng(47);
  std::vector<double> x(9);
  for (int s = 0; s < 50; ++s) {
    for (double& v : x) v = rng.next_in(-2.0, 2.0);
    std::vector<double> rotated(x.begin() + 1, x.end());
    rotated.push_back(x.front());
    CHECK(eval_basic(BasicFn::ExpGriewRosen, x) ==
          doctest::Approx(eval_basic(BasicFn::ExpGriewRosen, rotated)).epsilon(1e-10));
  }
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(eval_basic(BasicFn::Sphere, std::vector<double>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_basic(BasicFn::Rosenbrock, std::vector<double>{1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_basic(BasicFn::ExpGriewRosen, std::vector<double>{1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_basic(BasicFn::Sphere, std::vector<double>{0.0, std::nan("")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(basic_fn_from_ordinal(15), std::invalid_argument);
  CHECK(basic_fn_from_ordinal(13) == BasicFn::ExpGriewRosen);
}

TEST_CASE("single-element elliptic has unit conditioning") {
  CHECK(eval_basic(BasicFn::Elliptic, std::vector<double>{3.0}) == 9.0);
  // 1e6 conditioning across the first/last coordinates at length > 1.
  const double f = eval_basic(BasicFn::Elliptic, std::vector<double>{0.0, 1.0});
  CHECK(f == doctest::Approx(1e6));
}
