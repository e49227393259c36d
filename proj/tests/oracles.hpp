#pragma once

// Test-only reference computations, independent of the library's
// integrators and quadratures.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "prytz/moments.hpp"
#include "prytz/vec2.hpp"

namespace oracles {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTau = 2.0 * std::numbers::pi;

inline double shoelace_area(const std::vector<prytz::Vec2>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += prytz::cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * s;
}

// Exact polygon moments: signed fan triangles from the origin evaluated
// with the edge-midpoint rule, which integrates quadratics exactly — and
// the moment integrands 1, x, y, x²+y² are all of degree <= 2.
inline prytz::Moments polygon_moments(const std::vector<prytz::Vec2>& v) {
  prytz::Moments m;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const prytz::Vec2 a = v[i], b = v[(i + 1) % v.size()];
    const double s = 0.5 * prytz::cross(a, b);  // signed triangle (0, a, b)
    const prytz::Vec2 m1 = 0.5 * a, m2 = 0.5 * (a + b), m3 = 0.5 * b;
    auto add = [&](auto f) { return s * (f(m1) + f(m2) + f(m3)) / 3.0; };
    m.area += s;
    m.mx += add([](prytz::Vec2 p) { return p.x; });
    m.my += add([](prytz::Vec2 p) { return p.y; });
    m.m2 += add([](prytz::Vec2 p) { return p.x * p.x + p.y * p.y; });
  }
  return m;
}

// Second polar moment of the disk |p| <= r by 1-D midpoint strips:
// M2 = ∫ x²·2Y(x) + (2/3)Y(x)³ dx with Y = sqrt(r² − x²).
inline double disk_m2_strips(double r, std::size_t strips) {
  const double h = 2.0 * r / static_cast<double>(strips);
  double acc = 0.0;
  for (std::size_t i = 0; i < strips; ++i) {
    const double x = -r + (static_cast<double>(i) + 0.5) * h;
    const double y = std::sqrt(std::max(0.0, r * r - x * x));
    acc += x * x * 2.0 * y + (2.0 / 3.0) * y * y * y;
  }
  return acc * h;
}

// Exact lift along a straight segment. With ψ = θ − α (α the segment
// direction) and s the arc length, dψ/ds = sin(ψ)/l, so
// tan(ψ/2) evolves by the factor e^{s/l}. Returns θ at the far end.
inline double segment_lift_exact(prytz::Vec2 from, prytz::Vec2 to, double l,
                                 double theta0) {
  const prytz::Vec2 d = to - from;
  const double len = prytz::norm(d);
  if (len == 0.0) return theta0;
  const double alpha = std::atan2(d.y, d.x);
  const double psi0 = theta0 - alpha;
  const double w = std::remainder(psi0, kTau);
  if (std::abs(std::abs(w) - kPi) < 1e-15) return theta0;  // fixed point
  const double n = psi0 - w;  // multiple of 2π
  const double psi = 2.0 * std::atan(std::tan(0.5 * w) * std::exp(len / l)) + n;
  return alpha + psi;
}

namespace detail {
// Continuous antiderivative of 1/(1 + k cos ψ) for |k| < 1.
inline double poisson_antiderivative(double psi, double k) {
  const double f = std::sqrt(1.0 - k * k);
  const double q = std::sqrt((1.0 - k) / (1.0 + k));
  const double n = std::floor((psi + kPi) / kTau);
  const double w = psi - kTau * n;  // in [−π, π)
  return (2.0 / f) * (std::atan(q * std::tan(0.5 * w)) + kPi * n);
}
}  // namespace detail

// Exact Δθ for one counterclockwise traversal of a circle of radius R
// centered at the origin, starting at polar angle start_angle: the reduced
// angle ψ = θ − φ obeys dψ/dφ = −(1 + (R/l) cos ψ), solved through the
// closed-form quadrature above and a bisection.
inline double circle_lift_exact(double R, double l, double theta0,
                                double start_angle = 0.0) {
  const double k = R / l;
  const double psi0 = theta0 - start_angle;
  const double target = detail::poisson_antiderivative(psi0, k) - kTau;
  double lo = psi0 - kTau * (1.0 + k) - 1e-9;
  double hi = psi0 - kTau * (1.0 - k) + 1e-9;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (detail::poisson_antiderivative(mid, k) > target)
      hi = mid;
    else
      lo = mid;
  }
  const double psiT = 0.5 * (lo + hi);
  return kTau + psiT - psi0;
}

// Exact Δθ of the centroid-start loop around the circle of radius R
// centered at the origin: segment out, full circle, segment back.
inline double circle_loop_lift_exact(double R, double l, double theta0) {
  const prytz::Vec2 o{0.0, 0.0}, b{R, 0.0};
  const double th_a = segment_lift_exact(o, b, l, theta0);
  const double th_b = th_a + circle_lift_exact(R, l, th_a, 0.0);
  const double th_c = segment_lift_exact(b, o, l, th_b);
  return th_c - theta0;
}

// 30-term power series of exp([[iγ, β], [β*, −iγ]]); returns (a, b).
inline std::pair<std::complex<double>, std::complex<double>> su11_exp_series(
    double gamma, std::complex<double> beta) {
  using C = std::complex<double>;
  C x00(0.0, gamma), x01 = beta, x10 = std::conj(beta), x11(0.0, -gamma);
  C a(1.0, 0.0), b(0.0, 0.0);       // accumulated exp
  C t00(1.0, 0.0), t01(0.0, 0.0), t10(0.0, 0.0), t11(1.0, 0.0);  // term
  for (int n = 1; n <= 30; ++n) {
    const C u00 = (t00 * x00 + t01 * x10) / static_cast<double>(n);
    const C u01 = (t00 * x01 + t01 * x11) / static_cast<double>(n);
    const C u10 = (t10 * x00 + t11 * x10) / static_cast<double>(n);
    const C u11 = (t10 * x01 + t11 * x11) / static_cast<double>(n);
    t00 = u00;
    t01 = u01;
    t10 = u10;
    t11 = u11;
    a += t00;
    b += t01;
  }
  return {a, b};
}

}  // namespace oracles
