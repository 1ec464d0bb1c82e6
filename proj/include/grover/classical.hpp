#pragma once

#include <cmath>
#include <vector>

#include "grover/transfer.hpp"

namespace grover {

// Non-relativistic engine: the exact v0 -> 0 limit of the relativistic
// dynamics and the independent oracle for step counts. Runs in plain double;
// classical trajectories are scale invariant in v0, so precision never limits
// the regime.

struct ClassicalState {
  double v_big;
  double v_small;
  double mass_ratio;
};

/// 1D elastic collision from momentum and kinetic-energy conservation.
inline ClassicalState classical_collide(const ClassicalState& s) {
  if (!std::isfinite(s.v_big) || !std::isfinite(s.v_small)) {
    throw std::domain_error("classical_collide: velocities must be finite");
  }
  if (!(s.mass_ratio >= 1)) {
    throw std::domain_error("classical_collide: mass_ratio must be >= 1");
  }
  if (!(s.v_big > s.v_small)) {
    throw NoApproachError("classical_collide: balls are not closing (need v_big > v_small)");
  }
  const double m = s.mass_ratio;
  const double v1p = ((m - 1) * s.v_big + 2 * s.v_small) / (m + 1);
  const double v2p = (2 * m * s.v_big - (m - 1) * s.v_small) / (m + 1);
  return {v1p, v2p, m};
}

struct ClassicalOutcome {
  long steps_to_max = 0;
  double max_fraction = 0;
  Termination termination = Termination::first_max_found;
  bool big_ball_reversed = false;
  std::vector<ClassicalState> trajectory;  // index = step; only if recorded
};

/// Same iteration protocol and stop rule as run_transfer, with the classical
/// collision map and K = m v^2 / 2.
inline ClassicalOutcome classical_transfer(double n, double v0, long max_iter = 0,
                                           bool record_trajectory = false) {
  if (!(n >= 2)) throw std::domain_error("classical_transfer: n must be >= 2");
  if (!(v0 > 0)) throw std::domain_error("classical_transfer: v0 must be positive");
  if (max_iter <= 0) max_iter = default_max_iter(n);

  const double m = n - 1;
  const double total_kinetic = n * v0 * v0 / 2;
  ClassicalState s{v0, v0, m};
  double frac = (v0 * v0 / 2) / total_kinetic;  // exactly 1/n
  ClassicalOutcome out;
  if (record_trajectory) out.trajectory.push_back(s);

  long k = 0;
  for (;;) {
    if (!(s.v_small > 0)) {
      out.termination = Termination::small_ball_trapped;
      break;
    }
    if (k >= max_iter) {
      out.termination = Termination::iteration_limit;
      break;
    }
    const double bounced = -s.v_small;
    if (!(s.v_big > bounced)) {
      out.termination = Termination::no_approach;
      break;
    }
    const ClassicalState after = classical_collide({s.v_big, bounced, m});
    if (after.v_big < 0) out.big_ball_reversed = true;
    const double next_frac = (after.v_small * after.v_small / 2) / total_kinetic;
    if (next_frac <= frac) {
      out.termination = Termination::first_max_found;
      break;
    }
    s = after;
    frac = next_frac;
    ++k;
    if (record_trajectory) out.trajectory.push_back(s);
  }
  out.steps_to_max = k;
  out.max_fraction = frac;
  return out;
}

}  // namespace grover
