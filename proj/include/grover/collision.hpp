#pragma once

#include <cmath>
#include <stdexcept>

#include "grover/kinematics.hpp"

namespace grover {

/// Thrown when the balls are not closing in on each other. The collision
/// quadratic then degenerates to the identity root with multiplicity two and
/// no physical collision exists.
struct NoApproachError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class R>
struct AlphaState {
  R a_big;       // heavy ball, mass = mass_ratio
  R a_small;     // light ball, mass = 1
  R mass_ratio;  // M >= 1, in units of the light ball's mass
};

template <class R>
void validate(const AlphaState<R>& s) {
  if (!(s.a_big > 0) || !(s.a_small > 0)) {
    throw std::domain_error("AlphaState: alphas must be positive");
  }
  if (!(s.mass_ratio >= 1)) {
    throw std::domain_error("AlphaState: mass_ratio must be >= 1");
  }
}

/// Wall oracle: v -> -v for a ball moving toward the wall.
template <class R>
R wall_bounce(const R& a) {
  if (!(a > 1)) {
    throw std::domain_error(
        "wall_bounce: ball is not moving toward the wall (need a > 1)");
  }
  return 1 / a;
}

template <class R>
struct ConservedQuantities {
  R alpha_sum;        // S = M a1 + a2
  R alpha_recip_sum;  // T = M/a1 + 1/a2
  R energy;           // E = M g1 + g2; identically (S + T)/2
  R momentum;         // P = M g1 v1 + g2 v2; identically (S - T)/2
};

template <class R>
ConservedQuantities<R> conserved_quantities(const AlphaState<R>& s) {
  validate(s);
  const R& m = s.mass_ratio;
  ConservedQuantities<R> q;
  q.alpha_sum = m * s.a_big + s.a_small;
  q.alpha_recip_sum = m / s.a_big + 1 / s.a_small;
  q.energy = m * gamma_from_alpha(s.a_big) + gamma_from_alpha(s.a_small);
  q.momentum = m * momentum_factor_from_alpha(s.a_big) +
               momentum_factor_from_alpha(s.a_small);
  return q;
}

/// Second root of the collision quadratic T x^2 - (S/a + T a) x + S = 0 given
/// the known (identity) root a, via the product of roots S/T. No discriminant
/// is formed, so grazing collisions lose no digits.
template <class R>
R conjugate_root(const R& alpha_sum, const R& alpha_recip_sum, const R& known) {
  return alpha_sum / (alpha_recip_sum * known);
}

template <class R>
struct CollisionOutcome {
  AlphaState<R> state_after;
  R energy_drift;    // (E' - E) / E
  R momentum_drift;  // (P' - P) / (|P| + 1)
};

/// Elastic collision between the two balls. The small ball's new alpha is the
/// non-identity root of the quadratic; the big ball's follows from either
/// conservation law.
template <class R>
CollisionOutcome<R> collide(const AlphaState<R>& s) {
  validate(s);
  if (!(s.a_big > s.a_small)) {
    throw NoApproachError("collide: balls are not closing (need v_big > v_small)");
  }
  const R& m = s.mass_ratio;
  const R& a1 = s.a_big;
  const R& a2 = s.a_small;

  const R sum = m * a1 + a2;
  const R recip = m / a1 + 1 / a2;
  const R a2p = conjugate_root(sum, recip, a2);

  // a1' is fixed by S-conservation, a1' = a1 + (a2 - a2')/M, or equivalently
  // by T-conservation, a1' = M / (T - 1/a2'). Each form cancels badly in the
  // regime where its own term M a1' (resp. M/a1') is a small residue of the
  // conserved total; pick the one with the smaller ulp-level error estimate.
  using std::fabs;
  const R a1p_sum_form = a1 + (a2 - a2p) / m;
  R a1p = a1p_sum_form;
  const R recip_residue = recip - 1 / a2p;
  if (recip_residue > 0) {
    const R a1p_recip_form = m / recip_residue;
    if (!(a1p_sum_form > 0)) {
      a1p = a1p_recip_form;
    } else {
      const R err_sum_form = (m * a1 + a2 + a2p) / (m * a1p_sum_form);
      const R err_recip_form = a1p_recip_form * (m / a1 + 1 / a2 + 1 / a2p) / m;
      if (err_recip_form < err_sum_form) a1p = a1p_recip_form;
    }
  }

  CollisionOutcome<R> out;
  out.state_after = AlphaState<R>{a1p, a2p, m};
  validate(out.state_after);

  const R e_before = m * gamma_from_alpha(a1) + gamma_from_alpha(a2);
  const R p_before = m * momentum_factor_from_alpha(a1) + momentum_factor_from_alpha(a2);
  const R e_after = m * gamma_from_alpha(a1p) + gamma_from_alpha(a2p);
  const R p_after = m * momentum_factor_from_alpha(a1p) + momentum_factor_from_alpha(a2p);
  out.energy_drift = (e_after - e_before) / e_before;
  out.momentum_drift = (p_after - p_before) / (fabs(p_before) + 1);
  return out;
}

}  // namespace grover
