#pragma once

#include <cmath>
#include <stdexcept>

#include "grover/scalars.hpp"

namespace grover {

// alpha = sqrt((1+v)/(1-v)) = exp(rapidity). Every quantity of the dynamics
// has a cancellation-free expression in alpha, so states are stored as alphas
// and velocities are derived views. v = 0 maps to alpha = 1, v -> 1 sends
// alpha -> infinity, and flipping the sign of v inverts alpha.

template <class R>
R alpha_from_velocity(const R& v) {
  using std::fabs;
  if (!(fabs(v) < 1)) {
    throw std::domain_error("alpha_from_velocity: |v| must be < 1");
  }
  using std::sqrt;
  return sqrt((1 + v) / (1 - v));
}

/// Same map with x = 1 - v supplied directly, for speeds so close to 1 that
/// forming v first would destroy the digits of 1 - v.
template <class R>
R alpha_from_one_minus_velocity(const R& x) {
  if (!(x > 0) || !(x <= 1)) {
    throw std::domain_error("alpha_from_one_minus_velocity: need 0 < x <= 1");
  }
  using std::sqrt;
  return sqrt((2 - x) / x);
}

template <class R>
R velocity_from_alpha(const R& a) {
  if (!(a > 0)) {
    throw std::domain_error("velocity_from_alpha: alpha must be positive");
  }
  const R a2 = a * a;
  return (a2 - 1) / (a2 + 1);
}

/// Lorentz factor 1/sqrt(1-v^2), evaluated as (a + 1/a)/2 without ever
/// forming v.
template <class R>
R gamma_from_alpha(const R& a) {
  if (!(a > 0)) {
    throw std::domain_error("gamma_from_alpha: alpha must be positive");
  }
  return (a + 1 / a) / 2;
}

/// gamma * v, evaluated as (a - 1/a)/2. Odd in the velocity.
template <class R>
R momentum_factor_from_alpha(const R& a) {
  if (!(a > 0)) {
    throw std::domain_error("momentum_factor_from_alpha: alpha must be positive");
  }
  return (a - 1 / a) / 2;
}

/// Kinetic energy mass * (gamma - 1) in the form mass * (a-1)^2 / (2a), which
/// keeps all digits at a ~ 1 where gamma - 1 would cancel to nothing.
template <class R>
R kinetic_from_alpha(const R& a, const R& mass) {
  if (!(a > 0)) {
    throw std::domain_error("kinetic_from_alpha: alpha must be positive");
  }
  if (!(mass > 0)) {
    throw std::domain_error("kinetic_from_alpha: mass must be positive");
  }
  const R d = a - 1;
  return mass * d * d / (2 * a);
}

}  // namespace grover
