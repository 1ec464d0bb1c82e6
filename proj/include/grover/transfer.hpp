#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "grover/collision.hpp"

namespace grover {

enum class Termination {
  first_max_found,
  no_approach,
  small_ball_trapped,
  iteration_limit,
};

inline const char* to_string(Termination t) {
  switch (t) {
    case Termination::first_max_found: return "first_max_found";
    case Termination::no_approach: return "no_approach";
    case Termination::small_ball_trapped: return "small_ball_trapped";
    case Termination::iteration_limit: return "iteration_limit";
  }
  return "unknown";
}

/// An order of magnitude above the classical step bound pi/4 sqrt(N).
inline long default_max_iter(double n) {
  return 10 * static_cast<long>(std::ceil(std::numbers::pi / 4 * std::sqrt(n))) + 100;
}

template <class R>
struct TransferConfig {
  R n = 2;  // number of unit masses; the heavy ball carries n - 1 of them
  std::optional<R> v0;
  std::optional<R> one_minus_v0;
  long max_iter = 0;  // 0 = default_max_iter(n)
  bool record_trajectory = false;
};

template <class R>
struct TrajectoryPoint {
  long step;  // 0 = initial state, k >= 1 = after the k-th collision
  AlphaState<R> state;
  R k1_fraction;
  R k2_fraction;
  R energy_drift_cum;    // summed per-collision energy drifts
  R momentum_drift_cum;  // summed per-collision momentum drifts
};

template <class R>
struct TransferOutcome {
  long steps_to_max = 0;
  R max_fraction = 0;
  Termination termination = Termination::first_max_found;
  bool big_ball_reversed = false;
  std::vector<TrajectoryPoint<R>> trajectory;  // only if record_trajectory
};

/// (K1, K2) divided by the conserved total kinetic energy.
template <class R>
std::pair<R, R> kinetic_fractions(const AlphaState<R>& s, const R& total_kinetic) {
  if (!(total_kinetic > 0)) {
    throw std::domain_error("kinetic_fractions: total kinetic energy must be positive");
  }
  const R k1 = kinetic_from_alpha(s.a_big, s.mass_ratio);
  const R k2 = kinetic_from_alpha(s.a_small, R(1));
  return {k1 / total_kinetic, k2 / total_kinetic};
}

/// The energy transfer driver: repeat (wall bounce, collision) from the state
/// where both balls move right at v0, and stop at the first maximum of the
/// small ball's kinetic-energy fraction. One look-ahead collision past the
/// maximum certifies it; on an exact plateau the earlier step wins.
template <class R>
TransferOutcome<R> run_transfer(const TransferConfig<R>& cfg) {
  if (!(cfg.n >= 2)) {
    throw std::domain_error("run_transfer: n must be >= 2");
  }
  if (cfg.v0.has_value() == cfg.one_minus_v0.has_value()) {
    throw std::invalid_argument("run_transfer: supply exactly one of v0 / one_minus_v0");
  }
  R a0;
  if (cfg.v0) {
    if (!(*cfg.v0 > 0)) throw std::domain_error("run_transfer: v0 must be positive");
    a0 = alpha_from_velocity(*cfg.v0);
  } else {
    if (!(*cfg.one_minus_v0 < 1)) {
      throw std::domain_error("run_transfer: 1 - v0 must be < 1 (v0 must be positive)");
    }
    a0 = alpha_from_one_minus_velocity(*cfg.one_minus_v0);
  }
  const R m = cfg.n - 1;
  const long max_iter =
      cfg.max_iter > 0 ? cfg.max_iter : default_max_iter(static_cast<double>(cfg.n));

  const R kin_unit = kinetic_from_alpha(a0, R(1));  // gamma0 - 1
  const R total_kinetic = cfg.n * kin_unit;         // K2/K_T starts at exactly 1/n

  AlphaState<R> s{a0, a0, m};
  R frac = kin_unit / total_kinetic;
  TransferOutcome<R> out;
  R e_cum = 0;
  R p_cum = 0;
  if (cfg.record_trajectory) {
    auto [f1, f2] = kinetic_fractions(s, total_kinetic);
    out.trajectory.push_back({0, s, f1, f2, e_cum, p_cum});
  }

  long k = 0;
  for (;;) {
    if (!(s.a_small > 1)) {
      out.termination = Termination::small_ball_trapped;
      break;
    }
    if (k >= max_iter) {
      out.termination = Termination::iteration_limit;
      break;
    }
    const R bounced = wall_bounce(s.a_small);
    if (!(s.a_big > bounced)) {
      out.termination = Termination::no_approach;
      break;
    }
    const CollisionOutcome<R> c = collide(AlphaState<R>{s.a_big, bounced, m});
    const R next_frac = kinetic_from_alpha(c.state_after.a_small, R(1)) / total_kinetic;
    if (next_frac <= frac) {
      out.termination = Termination::first_max_found;
      break;
    }
    if (c.state_after.a_big < 1) out.big_ball_reversed = true;
    s = c.state_after;
    frac = next_frac;
    ++k;
    e_cum += c.energy_drift;
    p_cum += c.momentum_drift;
    if (cfg.record_trajectory) {
      auto [f1, f2] = kinetic_fractions(s, total_kinetic);
      out.trajectory.push_back({k, s, f1, f2, e_cum, p_cum});
    }
  }
  out.steps_to_max = k;
  out.max_fraction = frac;
  return out;
}

}  // namespace grover
