#pragma once

#include <complex>

#include "prytz/vec2.hpp"

namespace prytz {

// Element of su(1,1): the trace-free matrix [[iγ, β], [β*, −iγ]].
// Basis coefficients (c1, c2, c3) with respect to
//   e1 = [[0,1],[1,0]],  e2 = [[0,i],[−i,0]],  e3 = [[i,0],[0,−i]]
// are β = c1 + i·c2, γ = c3. The induced vector field on the circle is
//   θ ↦ −2 c1 sinθ + 2 c2 cosθ + 2 c3.
struct SU11Vector {
  double gamma = 0.0;
  std::complex<double> beta{0.0, 0.0};

  static SU11Vector from_basis(double c1, double c2, double c3) {
    return {c3, {c1, c2}};
  }
  double c1() const { return beta.real(); }
  double c2() const { return beta.imag(); }
  double c3() const { return gamma; }

  double circle_field(double theta) const {
    return -2.0 * c1() * std::sin(theta) + 2.0 * c2() * std::cos(theta) +
           2.0 * gamma;
  }
  double norm() const { return std::sqrt(gamma * gamma + std::norm(beta)); }
};

inline SU11Vector operator+(const SU11Vector& a, const SU11Vector& b) {
  return {a.gamma + b.gamma, a.beta + b.beta};
}
inline SU11Vector operator-(const SU11Vector& a, const SU11Vector& b) {
  return {a.gamma - b.gamma, a.beta - b.beta};
}
inline SU11Vector operator*(double s, const SU11Vector& v) {
  return {s * v.gamma, s * v.beta};
}

// Matrix commutator [a, b] = ab − ba, closed in su(1,1).
SU11Vector bracket(const SU11Vector& a, const SU11Vector& b);

// Element of PSU(1,1): [[a, b], [b*, a*]] with |a|² − |b|² = 1, mod ±I.
// The canonical representative has Re(a) > 0, or Re(a) = 0 and Im(a) > 0.
struct PSU11Element {
  std::complex<double> a{1.0, 0.0};
  std::complex<double> b{0.0, 0.0};

  static PSU11Element identity() { return {}; }

  PSU11Element compose(const PSU11Element& rhs) const;  // matrix product
  PSU11Element inverse() const;
  double det() const { return std::norm(a) - std::norm(b); }

  // Rescales so |a|² − |b|² = 1 and picks the canonical ±I representative.
  void normalize();
};

// Closed-form exponential using X² = Δ·I with Δ = |β|² − γ²; hyperbolic,
// trigonometric, or Taylor branch depending on the sign and size of Δ.
PSU11Element su11_exp(const SU11Vector& v);

// Möbius action on the circle, (a e^{iθ} + b)/(b* e^{iθ} + a*), returned as
// the angle lift nearest the input (principal difference in (−π, π]).
double act(const PSU11Element& g, double theta);

// Ad_g(m) = g m g⁻¹.
SU11Vector ad(const PSU11Element& g, const SU11Vector& m);

// Connection one-form on the base, ϖ(v) = (vx e1 + vy e2) / (2l).
SU11Vector connection_form(Vec2 v, double l);

// Principal connection at (p, g): ω(v, X_ξ) = ξ + Ad_{g⁻¹} ϖ(v).
SU11Vector principal_form(Vec2 v, const SU11Vector& xi, const PSU11Element& g,
                          double l);

// Curvature 2-form on the base: Ω̄(u, v) = −(u ∧ v)/(2l²) · e3.
SU11Vector curvature_base(Vec2 u, Vec2 v, double l);

// Curvature of the principal connection: Ad_{g⁻¹} ∘ Ω̄.
SU11Vector curvature_principal(Vec2 u, Vec2 v, const PSU11Element& g,
                               double l);

}  // namespace prytz
