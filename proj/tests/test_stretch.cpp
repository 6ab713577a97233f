#include <cmath>
#include <random>

#include "doctest.h"
#include "gdep/error.hpp"
#include "gdep/stretch.hpp"
#include "support/oracles.hpp"

using namespace gdep;

TEST_CASE("StretchMap1D: identity outside segments, linear inside") {
  const StretchMap1D m({{10, 20, 1.5}});
  CHECK(m(0) == 0.0);
  CHECK(m(10) == 10.0);
  CHECK(m(15) == 17.5);
  CHECK(m(20) == 25.0);
  CHECK(m(25) == 30.0);
  CHECK(m(-7) == -7.0);
  CHECK_FALSE(m.is_identity());
  CHECK(StretchMap1D().is_identity());
  CHECK(StretchMap1D({{0, 1, 1.0}}).is_identity());
}

TEST_CASE("StretchMap1D: rejects malformed segments") {
  CHECK_THROWS(StretchMap1D({{0, 2, 1}, {1, 3, 1}}));
  CHECK_THROWS(StretchMap1D({{0, 2, 0.5}}));
  CHECK_THROWS(StretchMap1D({{2, 2, 1}}));
  CHECK_NOTHROW(StretchMap1D({{2, 3, 1}, {0, 2, 2}}));
  CHECK(StretchMap1D({{2, 3, 1}, {0, 2, 2}}).segments().front().start == 0.0);
}

TEST_CASE("build_map: a short target is grown through its interval") {
  const std::vector<StretchInterval> ivs{{Axis::X, 10, 20}};
  const std::vector<StretchTarget> targets{{10, 20, 15}};
  const auto m = build_map(ivs, targets);
  CHECK(m(15) == doctest::Approx(17.5).epsilon(1e-12));
  CHECK(m(25) == doctest::Approx(30).epsilon(1e-12));
}

TEST_CASE("build_map: deficit shared in proportion to overlap") {
  const std::vector<StretchInterval> ivs{{Axis::X, 2, 4}, {Axis::X, 6, 8}};
  const std::vector<StretchTarget> targets{{0, 10, 14}};
  const auto m = build_map(ivs, targets);
  REQUIRE(m.segments().size() == 2);
  CHECK(m.segments()[0].scale == doctest::Approx(2.0));
  CHECK(m.segments()[1].scale == doctest::Approx(2.0));
  CHECK(m(10) == doctest::Approx(14.0));
  CHECK(m(5) == doctest::Approx(7.0));
}

TEST_CASE("build_map: partial overlap only stretches the overlapping part") {
  // Interval [0,4] overlaps target [2,6] by 2, so the slope inside the
  // interval must rise by deficit/2.
  const std::vector<StretchInterval> ivs{{Axis::X, 0, 4}};
  const std::vector<StretchTarget> targets{{2, 6, 7}};
  const auto m = build_map(ivs, targets);
  CHECK(m(6) - m(2) == doctest::Approx(7.0));
  CHECK(m.segments()[0].scale == doctest::Approx(2.5));
}

TEST_CASE("build_map: no growth when requirement already met") {
  const std::vector<StretchInterval> ivs{{Axis::Y, 0, 4}};
  const std::vector<StretchTarget> targets{{0, 4, 3}};
  CHECK(build_map(ivs, targets).is_identity());
}

TEST_CASE("build_map: a short target without an interval fails") {
  const std::vector<StretchInterval> ivs{{Axis::X, 10, 12}};
  const std::vector<StretchTarget> targets{{0, 4, 5}};
  try {
    build_map(ivs, targets);
    FAIL("expected E_NO_COVERAGE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::E_NO_COVERAGE);
  }
}

TEST_CASE("build_map property: every target reaches its size and the map matches its integral") {
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> len(0.5, 10);
  std::uniform_real_distribution<double> grow(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<StretchInterval> ivs;
    double cursor = 0;
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int i = 0; i < n; ++i) {
      const double s = cursor + std::uniform_real_distribution<double>(0, 8)(rng);
      const double e = s + len(rng);
      ivs.push_back({Axis::X, s, e});
      cursor = e;
    }
    std::vector<StretchTarget> targets;
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < k; ++i) {
      // Anchor each target on an interval so coverage holds.
      const auto& iv = ivs[std::uniform_int_distribution<std::size_t>(0, ivs.size() - 1)(rng)];
      const double lo = iv.start - std::uniform_real_distribution<double>(0, 3)(rng);
      const double hi = iv.start + std::uniform_real_distribution<double>(0.1, 6)(rng);
      targets.push_back({lo, hi, (hi - lo) * grow(rng)});
    }
    const auto m = build_map(ivs, targets);
    for (const auto& t : targets) CHECK(m(t.hi) - m(t.lo) >= t.required - 1e-9 * t.required);

    const auto [xs, fs] = oracle::integrate_map(m.segments(), -5.0, cursor + 5.0, 2001);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      CHECK(std::abs(m(xs[i]) - fs[i]) <= 1e-9 * (1.0 + std::abs(fs[i])));
      if (i > 0) CHECK(m(xs[i]) > m(xs[i - 1]));
    }
  }
}

TEST_CASE("build_map property: distances between points outside every interval grow by the enclosed growth only") {
  const std::vector<StretchInterval> ivs{{Axis::Z, 4, 6}};
  const std::vector<StretchTarget> targets{{3, 7, 9}};
  const auto m = build_map(ivs, targets);
  CHECK(m(20) - m(10) == 10.0);
  CHECK(m(-3) - m(-8) == 5.0);
  CHECK(m(10) - m(0) == doctest::Approx(15.0));
}
