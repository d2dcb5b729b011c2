#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <vector>

#include "etmof/linkage.hpp"
#include "etmof/rng.hpp"

using namespace etmof;

namespace {

struct SliceData {
  std::vector<double> values;
  std::vector<int> index;
  int n_total;
  IndexedSlice slice() const { return {values, index, n_total}; }
};

// A slice placed exactly on the closed-form target manifold.
SliceData at_target(LinkageFn fn, const std::vector<int>& idx, int n, double y1,
                    double y2) {
  SliceData d;
  d.index = idx;
  d.n_total = n;
  for (const int i : idx) d.values.push_back(linkage_target(fn, i, n, y1, y2));
  return d;
}

const LinkageFn kAll[] = {LinkageFn::L1, LinkageFn::L2, LinkageFn::L3, LinkageFn::L4,
                          LinkageFn::L5, LinkageFn::L6, LinkageFn::L7, LinkageFn::L8};

} // namespace

TEST_CASE("every linkage function vanishes on its target manifold") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 10 + static_cast<int>(rng.next_below(50));
    const int len = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n / 2)));
    std::vector<int> idx;
    int at = 1 + static_cast<int>(rng.next_below(3));
    for (int j = 0; j < len && at <= n; ++j) {
      idx.push_back(at);
      at += 1 + static_cast<int>(rng.next_below(2));
    }
    const double y1 = rng.next_double();
    const double y2 = rng.next_double();
    for (const LinkageFn fn : kAll) {
      const SliceData d = at_target(fn, idx, n, y1, y2);
      const double v = fn == LinkageFn::L6 ? eval_linkage(fn, d.slice(), y1, y2)
                                           : eval_linkage(fn, d.slice(), y1);
      CHECK(std::fabs(v) <= 1e-9);
    }
  }
}

TEST_CASE("square-sum linkages are nonnegative everywhere") {
  const LinkageFn fns[] = {LinkageFn::L1, LinkageFn::L2, LinkageFn::L4,
                           LinkageFn::L5, LinkageFn::L6, LinkageFn::L7};
  SplitMix64 rng(102);
  for (int trial = 0; trial < 300; ++trial) {
    SliceData d;
    d.n_total = 40;
    for (int j = 0; j < 8; ++j) {
      d.index.push_back(5 + 2 * j);
      d.values.push_back(rng.next_in(-10.0, 10.0));
    }
    const double y1 = rng.next_double();
    const double y2 = rng.next_double();
    for (const LinkageFn fn : fns) {
      const double v = fn == LinkageFn::L6 ? eval_linkage(fn, d.slice(), y1, y2)
                                           : eval_linkage(fn, d.slice(), y1);
      CHECK(v >= 0.0);
    }
    // L3 and L8 are bounded below by zero through their cosine offsets.
    CHECK(eval_linkage(LinkageFn::L3, d.slice(), y1) >= 0.0);
    CHECK(eval_linkage(LinkageFn::L8, d.slice(), y1) >= 0.0);
  }
}

TEST_CASE("element-mean linkages split across slices with size weights") {
  const LinkageFn fns[] = {LinkageFn::L1, LinkageFn::L2, LinkageFn::L4,
                           LinkageFn::L5, LinkageFn::L6, LinkageFn::L7};
  SplitMix64 rng(103);
  SliceData whole;
  whole.n_total = 30;
  for (int j = 0; j < 10; ++j) {
    whole.index.push_back(3 + j * 2);
    whole.values.push_back(rng.next_in(-3.0, 3.0));
  }
  const double y1 = 0.37, y2 = 0.81;
  for (const LinkageFn fn : fns) {
    SliceData a, b;
    a.n_total = b.n_total = whole.n_total;
    for (int j = 0; j < 10; ++j) {
      (j < 4 ? a : b).index.push_back(whole.index[j]);
      (j < 4 ? a : b).values.push_back(whole.values[j]);
    }
    const auto ev = [&](const SliceData& d) {
      return fn == LinkageFn::L6 ? eval_linkage(fn, d.slice(), y1, y2)
                                 : eval_linkage(fn, d.slice(), y1);
    };
    const double joint = ev(whole) * 10.0;
    const double split = ev(a) * 4.0 + ev(b) * 6.0;
    CHECK(joint == doctest::Approx(split).epsilon(1e-12));
  }
}

TEST_CASE("printed zero-residual examples") {
  const std::vector<int> idx = {4, 7, 9};
  CHECK(std::fabs(eval_linkage(LinkageFn::L2,
                               at_target(LinkageFn::L2, idx, 20, 0.7, 0).slice(), 0.7)) <
        1e-15);
  CHECK(std::fabs(eval_linkage(LinkageFn::L3,
                               at_target(LinkageFn::L3, idx, 20, 0.5, 0).slice(), 0.5)) <
        1e-15);
  CHECK(std::fabs(eval_linkage(LinkageFn::L8,
                               at_target(LinkageFn::L8, idx, 20, 0.3, 0).slice(), 0.3)) <
        1e-15);
  CHECK(std::fabs(eval_linkage(LinkageFn::L6,
                               at_target(LinkageFn::L6, idx, 20, 0.2, 0.9).slice(), 0.2,
                               0.9)) < 1e-15);
  // L1 at y1 = 0: the target collapses to zero for every ordinal.
  SliceData zeros;
  zeros.n_total = 50;
  for (int j = 0; j < 10; ++j) {
    zeros.index.push_back(j + 5);
    zeros.values.push_back(0.0);
  }
  CHECK(eval_linkage(LinkageFn::L1, zeros.slice(), 0.0) == 0.0);
}

TEST_CASE("Lg operators") {
  SliceData d;
  d.n_total = 4;
  d.index = {1, 2, 3, 4};
  d.values = {1.0, 1.0, 1.0, 1.0};
  const std::vector<double> lo(4, 0.0), hi(4, 1.0);

  SUBCASE("zero input and zero y1 map to zero") {
    SliceData z = d;
    z.values.assign(4, 0.0);
    for (const double v : apply_linkage_operator(LgOperator::Lg1, z.slice(), 0.0, lo, hi)) {
      CHECK(v == 0.0);
    }
  }
  SUBCASE("linear scaling by ordinal") {
    const std::vector<double> z =
        apply_linkage_operator(LgOperator::Lg1, d.slice(), 0.0, lo, hi);
    const std::vector<double> expected = {1.25, 1.5, 1.75, 2.0};
    for (std::size_t j = 0; j < 4; ++j) CHECK(z[j] == doctest::Approx(expected[j]));
  }
  SUBCASE("nonlinear scaling vanishes at the last ordinal") {
    SliceData last;
    last.n_total = 4;
    last.index = {4};
    last.values = {1.0};
    const std::vector<double> z = apply_linkage_operator(
        LgOperator::Lg2, last.slice(), 0.0, std::vector<double>{0.0},
        std::vector<double>{1.0});
    CHECK(z[0] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("y1 shifts by the box width") {
    const std::vector<double> z =
        apply_linkage_operator(LgOperator::Lg1, d.slice(), 0.5, lo, hi);
    CHECK(z[0] == doctest::Approx(1.25 - 0.5));
  }
}

TEST_CASE("argument errors") {
  SliceData d;
  d.n_total = 20;
  d.index = {3, 5};
  d.values = {0.1, 0.2};
  CHECK_THROWS_AS(eval_linkage(LinkageFn::L6, d.slice(), 0.5), std::invalid_argument);
  SliceData tiny = d;
  tiny.n_total = 2;
  CHECK_THROWS_AS(eval_linkage(LinkageFn::L2, tiny.slice(), 0.5), std::invalid_argument);
  CHECK_THROWS_AS(eval_linkage(LinkageFn::L3, tiny.slice(), 0.5), std::invalid_argument);
  CHECK_THROWS_AS(eval_linkage(LinkageFn::L8, tiny.slice(), 0.5), std::invalid_argument);
  SliceData empty;
  empty.n_total = 20;
  CHECK_THROWS_AS(eval_linkage(LinkageFn::L1, empty.slice(), 0.5), std::invalid_argument);
}
