#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "grover/classical.hpp"
#include "grover/sweep.hpp"
#include "grover/transfer.hpp"

using grover::ClassicalState;

TEST_CASE("classical_collide examples") {
  // equal masses exchange velocities
  const auto x = grover::classical_collide({0.7, -0.2, 1});
  CHECK(x.v_big == doctest::Approx(-0.2).epsilon(1e-15));
  CHECK(x.v_small == doctest::Approx(0.7).epsilon(1e-15));

  // M = 3, (1, -1) -> (0, 2)
  const auto y = grover::classical_collide({1, -1, 3});
  CHECK(y.v_big == doctest::Approx(0.0));
  CHECK(y.v_small == doctest::Approx(2.0).epsilon(1e-15));

  // immovable-wall limit: v2' -> 2 v1 - v2
  const auto z = grover::classical_collide({0.3, -0.4, 1e12});
  CHECK(std::fabs(z.v_small - (2 * 0.3 - (-0.4))) < 1e-9);

  CHECK_THROWS_AS(grover::classical_collide({-0.2, 0.7, 1}), grover::NoApproachError);
  CHECK_THROWS_AS(grover::classical_collide({0.7, -0.2, 0.5}), std::domain_error);
}

TEST_CASE("classical conservation per collision") {
  const double m = 37.5;
  ClassicalState s{0.81, -0.33, m};
  for (int i = 0; i < 50; ++i) {
    const auto after = grover::classical_collide(s);
    const double e0 = m * s.v_big * s.v_big / 2 + s.v_small * s.v_small / 2;
    const double e1 = m * after.v_big * after.v_big / 2 + after.v_small * after.v_small / 2;
    const double p0 = m * s.v_big + s.v_small;
    const double p1 = m * after.v_big + after.v_small;
    CHECK(std::fabs(e1 - e0) / e0 <= 1e-12);
    CHECK(std::fabs(p1 - p0) / (std::fabs(p0) + 1) <= 1e-12);
    CHECK(after.v_small > after.v_big);
    s = {after.v_big, -after.v_small, m};  // feed it back through a bounce
    if (!(s.v_big > s.v_small)) break;
  }
}

TEST_CASE("classical_transfer small cases") {
  const auto n2 = grover::classical_transfer(2, 0.3);
  CHECK(n2.steps_to_max == 0);
  CHECK(n2.max_fraction == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(n2.termination == grover::Termination::first_max_found);

  // steps within +-1 of round(pi/4 * 10) = 8
  const auto n100 = grover::classical_transfer(100, 0.3);
  CHECK(n100.steps_to_max >= 7);
  CHECK(n100.steps_to_max <= 9);
  CHECK(n100.max_fraction > 0.99);
}

TEST_CASE("step count is independent of v0") {
  for (double n : {2.0, 10.0, 100.0, 3000.0}) {
    const auto fast = grover::classical_transfer(n, 0.3);
    const auto slow = grover::classical_transfer(n, 1e-6);
    CHECK(fast.steps_to_max == slow.steps_to_max);
    CHECK(fast.max_fraction == doctest::Approx(slow.max_fraction).epsilon(1e-12));
  }
}

TEST_CASE("full trajectory is scale invariant") {
  const auto a = grover::classical_transfer(500, 0.3, 0, true);
  const auto b = grover::classical_transfer(500, 1e-6, 0, true);
  REQUIRE(a.trajectory.size() == b.trajectory.size());
  for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
    CHECK(a.trajectory[i].v_big / 0.3 ==
          doctest::Approx(b.trajectory[i].v_big / 1e-6).epsilon(1e-12));
    CHECK(a.trajectory[i].v_small / 0.3 ==
          doctest::Approx(b.trajectory[i].v_small / 1e-6).epsilon(1e-12));
  }
}

TEST_CASE("asymptote pi/4 sqrt(N)") {
  for (double n : {1e4, 1e5, 1e6}) {
    const auto out = grover::classical_transfer(n, 0.3);
    const double ratio = out.steps_to_max / grover::classical_asymptote(n);
    CHECK(ratio >= 0.9);
    CHECK(ratio <= 1.1);
  }
}

TEST_CASE("agreement with the relativistic engine at v0 = 1e-6") {
  for (double n : {10.0, 100.0, 1000.0, 10000.0}) {
    grover::TransferConfig<grover::StandardReal> cfg;
    cfg.n = (long double)n;
    cfg.v0 = 1e-6L;
    const auto rel = grover::run_transfer(cfg);
    const auto cls = grover::classical_transfer(n, 1e-6);
    CHECK(rel.steps_to_max == cls.steps_to_max);
  }
}
