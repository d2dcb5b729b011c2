#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "etmof/dynamics.hpp"
#include "etmof/pareto.hpp"
#include "etmof/rng.hpp"
#include "etmof/suite.hpp"

using namespace etmof;

TEST_CASE("time instants follow the window schedule") {
  DynamicsSpec spec; // severity 10, frequency 20
  for (long tau = 0; tau <= 19; ++tau) CHECK(time_instant(tau, spec).t == 0.0);
  CHECK(time_instant(20, spec).t == doctest::Approx(0.1));
  CHECK(time_instant(620, spec).t == doctest::Approx(3.1));
  CHECK(time_instant(620, spec).change_index == 31);
  CHECK(time_instant(619, spec).change_index == 30);
  CHECK_THROWS_AS(time_instant(-1, spec), std::invalid_argument);
}

TEST_CASE("objectives are constant within one window") {
  const MultiTaskProblem p = instantiate(39);
  SplitMix64 rng(15);
  std::vector<double> x(50);
  for (double& v : x) v = rng.next_in(-1.0, 1.0);
  x[0] = 0.3;
  const DynamicsSpec& spec = *p.task(1).dynamics;
  const Objectives at0 = p.evaluate(1, x, time_instant(0, spec).t);
  for (long tau = 1; tau < spec.frequency; ++tau) {
    CHECK(p.evaluate(1, x, time_instant(tau, spec).t) == at0);
  }
  CHECK(p.evaluate(1, x, time_instant(spec.frequency, spec).t) != at0);
}

TEST_CASE("first dynamic instance at t = 0") {
  const MultiTaskProblem p = instantiate(33);
  // H(0) = 1.25, G(0) = 0: distance variables at zero leave g = 0 and
  // f2 = 1 - f1^1.25 (the dMOP2 form with the (1+g) normalization).
  std::vector<double> x(256, 0.0);
  x[0] = 0.5;
  const Objectives f = p.evaluate(1, x, 0.0);
  CHECK(f[0] == doctest::Approx(0.5));
  CHECK(f[1] == doctest::Approx(1.0 - std::pow(0.5, 1.25)).epsilon(1e-12));

  // Task 2 (ZJZ): target is G + (x^p)^H = 0.5^1.5 at t = 0.
  std::vector<double> x2(256, std::pow(0.5, 1.5));
  x2[0] = 0.5;
  const Objectives f2 = p.evaluate(2, x2, 0.0);
  CHECK(f2[0] == doctest::Approx(0.5));
  CHECK(f2[1] == doctest::Approx(1.0 - std::pow(0.5, 1.5)).epsilon(1e-12));
}

TEST_CASE("position index hops with time in the second dynamic instance") {
  const MultiTaskProblem p = instantiate(34);
  std::vector<double> x(50, 0.0);
  const Objectives f = p.evaluate(1, x, 0.0); // G=0, r=1, g=0
  CHECK(f[0] == 0.0);
  CHECK(f[1] == doctest::Approx(1.0));

  // At t = 1, G = 1 and the position variable is x_50.
  std::vector<double> x2(50, 1.0);
  x2[49] = 0.25;
  const Objectives g = p.evaluate(1, x2, 1.0);
  CHECK(g[0] == doctest::Approx(0.25));
  CHECK(g[1] == doctest::Approx(1.0 - std::sqrt(0.25)).epsilon(1e-12));
}

TEST_CASE("sphere identity for the DF10-style task") {
  const MultiTaskProblem p = instantiate(37);
  std::vector<double> x(50, 0.0);
  x[0] = 0.3;
  x[1] = 0.7;
  // distance target of task 2 at G(0)=0 is zero, so g = 0 on x^d = 0.
  const Objectives f = p.evaluate(2, x, 0.0);
  CHECK(f[0] * f[0] + f[1] * f[1] + f[2] * f[2] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("DF5-template tasks at their landscape optimum") {
  const MultiTaskProblem p = instantiate(39);
  const double t = 0.0; // G = 0, w_t = 0
  // Sphere and Griewank cores vanish at x^d = G(t).
  for (const int k : {1, 3}) {
    std::vector<double> x(50, 0.0);
    x[0] = 0.5;
    const Objectives f = p.evaluate(k, x, t);
    CHECK(f[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(f[1] == doctest::Approx(0.5).epsilon(1e-9));
  }
  // The Rosenbrock core vanishes at x^d = 1 + G(t) instead.
  std::vector<double> x(50, 1.0);
  x[0] = 0.5;
  const Objectives f = p.evaluate(2, x, t);
  CHECK(f[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(f[1] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("fronts repeat with the period of G") {
  const MultiTaskProblem p = instantiate(33);
  const TaskSpec& task = p.task(1);
  const ReferenceFront a = dynamic_front(task, 0.7, 200);
  const ReferenceFront b = dynamic_front(task, 4.7, 200);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i][0] == doctest::Approx(b.points[i][0]).epsilon(1e-9));
    CHECK(a.points[i][1] == doctest::Approx(b.points[i][1]).epsilon(1e-9));
  }
}

TEST_CASE("analytic fronts by family") {
  SUBCASE("dMOP2 curve at t = 0") {
    const MultiTaskProblem p = instantiate(33);
    const ReferenceFront f = dynamic_front(p.task(1), 0.0, 300);
    for (const auto& pt : f.points) {
      CHECK(pt[1] == doctest::Approx(1.0 - std::pow(pt[0], 1.25)).epsilon(1e-12));
    }
  }
  SUBCASE("DF11 points sit on the scaled sphere") {
    const MultiTaskProblem p = instantiate(37);
    const double t = 0.4;
    const double G = std::fabs(std::sin(0.5 * std::numbers::pi * t));
    const ReferenceFront f = dynamic_front(p.task(2), t, 300);
    for (const auto& pt : f.points) {
      const double r2 = pt[0] * pt[0] + pt[1] * pt[1] + pt[2] * pt[2];
      CHECK(std::sqrt(r2) == doctest::Approx(1.0 + G).epsilon(1e-9));
    }
  }
  SUBCASE("fronts are pairwise nondominated after filtering") {
    for (const int id : {37, 38, 40}) {
      const MultiTaskProblem p = instantiate(id);
      for (int k = 1; k <= p.task_count(); ++k) {
        const ReferenceFront f = dynamic_front(p.task(k), 1.3, 150);
        const auto keep = nondominated_indices(f.points);
        CHECK(keep.size() == f.points.size());
      }
    }
  }
  SUBCASE("monotone curve for the DF6-with-Rosenbrock task") {
    const MultiTaskProblem p = instantiate(40);
    const ReferenceFront f = dynamic_front(p.task(1), 0.9, 200); // G > 0: box-min path
    for (std::size_t i = 1; i < f.points.size(); ++i) {
      CHECK(f.points[i][0] >= f.points[i - 1][0] - 1e-12);
      CHECK(f.points[i][1] <= f.points[i - 1][1] + 1e-12);
    }
    // The box-constrained Rosenbrock minimum is strictly positive here.
    CHECK(f.points[0][1] > 1.0);
  }
}

TEST_CASE("change count over the standard horizon") {
  DynamicsSpec spec;
  long changes = 0;
  long prev = 0;
  for (long tau = 0; tau < 31 * spec.frequency; ++tau) {
    const TimeInstant ti = time_instant(tau, spec);
    if (ti.change_index != prev) {
      ++changes;
      prev = ti.change_index;
    }
  }
  CHECK(changes == 30);
}
