#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "etmof/metrics.hpp"
#include "etmof/rng.hpp"

using namespace etmof;

namespace {

ReferenceFront two_point_front() {
  return make_reference_front({{0.0, 1.0}, {1.0, 0.0}}, std::nullopt, 2);
}

} // namespace

TEST_CASE("igd of a front against itself is zero") {
  const ReferenceFront f = sample_reference_front(Shape::H2, 2, 500);
  CHECK(igd(f.points, f) == 0.0);
}

TEST_CASE("hand-computed two-point example equals one exactly") {
  const ReferenceFront ref = two_point_front();
  const std::vector<Objectives> s = {{0.0, 1.0}};
  CHECK(igd(s, ref) == 1.0); // (0 + |1-0|+|0-1|) / 2
}

TEST_CASE("manhattan versus euclidean distance") {
  const ReferenceFront ref = two_point_front();
  const std::vector<Objectives> s = {{0.0, 1.0}};
  CHECK(igd(s, ref, IgdDistance::Euclidean) == doctest::Approx(std::sqrt(2.0) / 2.0));
}

TEST_CASE("adding points never increases igd") {
  SplitMix64 rng(19);
  const ReferenceFront ref = sample_reference_front(Shape::H1, 2, 300);
  std::vector<Objectives> s;
  double last = 1e300;
  for (int i = 0; i < 40; ++i) {
    s.push_back({rng.next_double(), rng.next_double()});
    const double v = igd(s, ref);
    CHECK(v <= last + 1e-15);
    last = v;
  }
}

TEST_CASE("igd is invariant under per-objective affine rescaling") {
  SplitMix64 rng(20);
  std::vector<Objectives> ref_pts, s;
  for (int i = 0; i < 60; ++i) {
    ref_pts.push_back({rng.next_double(), rng.next_double(), rng.next_double()});
  }
  for (int i = 0; i < 25; ++i) {
    s.push_back({rng.next_double(), rng.next_double(), rng.next_double()});
  }
  const ReferenceFront ref = make_reference_front(ref_pts, std::nullopt, 3);
  const double base = igd(s, ref);

  const double a[3] = {3.0, 0.25, 40.0};
  const double b[3] = {-1.0, 5.0, 100.0};
  const auto map = [&](const Objectives& p) {
    return Objectives{a[0] * p[0] + b[0], a[1] * p[1] + b[1], a[2] * p[2] + b[2]};
  };
  std::vector<Objectives> ref2, s2;
  for (const auto& p : ref_pts) ref2.push_back(map(p));
  for (const auto& p : s) s2.push_back(map(p));
  CHECK(igd(s2, make_reference_front(ref2, std::nullopt, 3)) ==
        doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("igd rejects an empty obtained set") {
  CHECK_THROWS_AS(igd({}, two_point_front()), std::invalid_argument);
}

TEST_CASE("migd is the plain mean with a length contract") {
  const std::vector<double> series = {1.0, 2.0, 3.0};
  CHECK(migd(series, 3) == doctest::Approx(2.0));
  CHECK(migd(std::vector<double>(30, 0.0), 30) == 0.0);
  CHECK_THROWS_AS(migd(series, 30), std::invalid_argument);
  CHECK_THROWS_AS(migd(std::vector<double>{}, 0), std::invalid_argument);
}

TEST_CASE("mss of identical optimizers is all zero") {
  const std::vector<std::vector<std::vector<double>>> v = {
      {{0.5, 1.0}, {0.25, 2.0}},
      {{0.5, 1.0}, {0.25, 2.0}},
  };
  for (const auto& runs : mean_standard_scores(v)) {
    for (const double s : runs) CHECK(s == 0.0);
  }
}

TEST_CASE("single-task two-sample z-scores") {
  const std::vector<std::vector<std::vector<double>>> v = {{{1.0}}, {{3.0}}};
  const auto scores = mean_standard_scores(v);
  CHECK(scores[0][0] == doctest::Approx(-1.0)); // mu=2, population sigma=1
  CHECK(scores[1][0] == doctest::Approx(1.0));
}

TEST_CASE("mss is invariant to per-task translation") {
  SplitMix64 rng(21);
  std::vector<std::vector<std::vector<double>>> v(
      2, std::vector<std::vector<double>>(3, std::vector<double>(4)));
  for (auto& o : v) {
    for (auto& r : o) {
      for (double& x : r) x = rng.next_double();
    }
  }
  const auto base = mean_standard_scores(v);
  auto shifted = v;
  for (auto& o : shifted) {
    for (auto& r : o) r[2] += 17.5; // constant added to one task everywhere
  }
  const auto moved = mean_standard_scores(shifted);
  for (std::size_t o = 0; o < base.size(); ++o) {
    for (std::size_t r = 0; r < base[o].size(); ++r) {
      CHECK(moved[o][r] == doctest::Approx(base[o][r]).epsilon(1e-9));
    }
  }
}

TEST_CASE("ranking consistency on random matrices") {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t runs = 1 + rng.next_below(4);
    const std::size_t tasks = 1 + rng.next_below(6);
    std::vector<std::vector<std::vector<double>>> v(
        2, std::vector<std::vector<double>>(runs, std::vector<double>(tasks)));
    for (std::size_t r = 0; r < runs; ++r) {
      for (std::size_t i = 0; i < tasks; ++i) {
        v[0][r][i] = rng.next_double();
        v[1][r][i] = v[0][r][i] + rng.next_double(); // B is never better
      }
    }
    const auto scores = mean_standard_scores(v);
    for (std::size_t r = 0; r < runs; ++r) {
      CHECK(scores[0][r] <= scores[1][r] + 1e-12);
    }
  }
}

TEST_CASE("mss input validation") {
  CHECK_THROWS_AS(mean_standard_scores({}), std::invalid_argument);
  CHECK_THROWS_AS(mean_standard_scores({{{1.0}}}), std::invalid_argument); // one sample
  CHECK_THROWS_AS(mean_standard_scores({{{1.0, 2.0}}, {{1.0}}}), std::invalid_argument);
}
