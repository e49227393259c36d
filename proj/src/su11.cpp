#include "prytz/su11.hpp"

#include <cmath>
#include <stdexcept>

namespace prytz {

namespace {
using C = std::complex<double>;
}

SU11Vector bracket(const SU11Vector& x, const SU11Vector& y) {
  // [[iγ1,β1],[β1*,−iγ1]]·[[iγ2,β2],[β2*,−iγ2]] − (1 ↔ 2)
  const double g = 2.0 * std::imag(x.beta * std::conj(y.beta));
  const C b = C(0.0, 2.0) * (x.gamma * y.beta - y.gamma * x.beta);
  return {g, b};
}

PSU11Element PSU11Element::compose(const PSU11Element& rhs) const {
  return {a * rhs.a + b * std::conj(rhs.b), a * rhs.b + b * std::conj(rhs.a)};
}

PSU11Element PSU11Element::inverse() const {
  return {std::conj(a), -b};
}

void PSU11Element::normalize() {
  const double d = det();
  if (!(d > 0.0))
    throw std::invalid_argument("psu11: |a|^2 - |b|^2 must stay positive");
  const double s = 1.0 / std::sqrt(d);
  a *= s;
  b *= s;
  if (a.real() < 0.0 || (a.real() == 0.0 && a.imag() < 0.0)) {
    a = -a;
    b = -b;
  }
}

PSU11Element su11_exp(const SU11Vector& v) {
  const double delta = std::norm(v.beta) - v.gamma * v.gamma;
  double c, s;
  if (std::abs(delta) < 1e-8) {
    c = 1.0 + 0.5 * delta * (1.0 + delta / 12.0);
    s = 1.0 + delta / 6.0 * (1.0 + delta / 20.0);
  } else if (delta > 0.0) {
    const double r = std::sqrt(delta);
    c = std::cosh(r);
    s = std::sinh(r) / r;
  } else {
    const double r = std::sqrt(-delta);
    c = std::cos(r);
    s = std::sin(r) / r;
  }
  PSU11Element g{{c, v.gamma * s}, v.beta * s};
  g.normalize();
  return g;
}

double act(const PSU11Element& g, double theta) {
  const C z = std::polar(1.0, theta);
  const C w = (g.a * z + g.b) / (std::conj(g.b) * z + std::conj(g.a));
  return theta + std::arg(w * std::conj(z));
}

SU11Vector ad(const PSU11Element& g, const SU11Vector& m) {
  // g M g⁻¹ with M = [[iγ, β], [β*, −iγ]]
  const C m00(0.0, m.gamma);
  const C m01 = m.beta;
  const C m10 = std::conj(m.beta);
  const C m11(0.0, -m.gamma);
  const C ia = g.a, ib = g.b;           // g
  const C ja = std::conj(g.a), jb = -g.b;  // g⁻¹ = [[a*, −b], [−b*, a]]
  // P = g · M
  const C p00 = ia * m00 + ib * m10;
  const C p01 = ia * m01 + ib * m11;
  const C p10 = std::conj(ib) * m00 + ja * m10;
  const C p11 = std::conj(ib) * m01 + ja * m11;
  // Q = P · g⁻¹
  const C q00 = p00 * ja + p01 * (-std::conj(ib));
  const C q01 = p00 * jb + p01 * ia;
  const C q10 = p10 * ja + p11 * (-std::conj(ib));
  const C q11 = p10 * jb + p11 * ia;
  // symmetrize back onto the su(1,1) slice
  return {0.5 * (q00.imag() - q11.imag()), 0.5 * (q01 + std::conj(q10))};
}

SU11Vector connection_form(Vec2 v, double l) {
  return {0.0, C(v.x, v.y) / (2.0 * l)};
}

SU11Vector principal_form(Vec2 v, const SU11Vector& xi, const PSU11Element& g,
                          double l) {
  return xi + ad(g.inverse(), connection_form(v, l));
}

SU11Vector curvature_base(Vec2 u, Vec2 v, double l) {
  return {-cross(u, v) / (2.0 * l * l), {0.0, 0.0}};
}

SU11Vector curvature_principal(Vec2 u, Vec2 v, const PSU11Element& g,
                               double l) {
  return ad(g.inverse(), curvature_base(u, v, l));
}

}  // namespace prytz
