#pragma once

#include <cstddef>

#include "prytz/curve.hpp"
#include "prytz/moments.hpp"
#include "prytz/su11.hpp"

namespace prytz {

// Holonomy of the connection along a tracer curve: solves the Lie-type
// equation Γ̇ = −ξ(t)Γ, ξ(t) = ϖ(γ̇(t)), with a fourth-order two-point
// Gauss–Magnus stepper. Per step of size h,
//   Ω = −(h/2)(ξ1 + ξ2) − (√3 h²/12)[ξ1, ξ2],   Γ ← exp(Ω)·Γ,
// where ξ1, ξ2 are sampled at the Gauss nodes t + (1/2 ∓ √3/6)h. The group
// constraint |a|² − |b|² = 1 is restored after every step.
// Throws NumericError on non-finite input.
PSU11Element holonomy(const Curve& curve, double l, std::size_t steps = 100000);

// Truncated Magnus series for a closed boundary trace that begins at the
// coordinate origin, in terms of region moments about that origin:
//   U1 = 0,  U2 = A/(2l²)·e3,  U3 = (My·e1 − Mx·e2)/(2l³),  U4 = M2/(4l⁴)·e3.
// For traces based elsewhere, shift the moments to the base point first
// (see shift_moments).
struct MagnusTerms {
  SU11Vector u1, u2, u3, u4;
  PSU11Element exp_sum;  // exp(U1 + U2 + U3 + U4)
};

MagnusTerms magnus_terms(const Moments& m, double l);

// Leading Magnus term −(1/2l)·∮(dx e1 + dy e2), evaluated from the curve
// endpoints. Vanishes exactly on closed curves.
SU11Vector magnus_u1(const Curve& curve, double l);

// Moments about a new reference point (parallel-axis transport):
// translating coordinates so `base` becomes the origin.
Moments shift_moments(const Moments& m, Vec2 base);

// act(exp(U1+..+U4), theta0) − theta0.
double predicted_delta_theta(const MagnusTerms& terms, double theta0);

}  // namespace prytz
