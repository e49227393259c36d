#include "prytz/holonomy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "prytz/detail/chain_integrator.hpp"
#include "prytz/errors.hpp"

namespace prytz {

PSU11Element holonomy(const Curve& curve, double l, std::size_t steps) {
  if (!(l > 0.0)) throw std::invalid_argument("holonomy: rod length must be positive");
  if (steps < 1) throw std::invalid_argument("holonomy: steps must be >= 1");

  const double T = curve.duration();
  const double h = T / static_cast<double>(steps);
  const double c1 = 0.5 - std::sqrt(3.0) / 6.0;
  const double c2 = 0.5 + std::sqrt(3.0) / 6.0;

  PSU11Element g = PSU11Element::identity();
  std::vector<double> cuts;
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = h * static_cast<double>(i);
    const double te = h * static_cast<double>(i + 1);
    // keep each Magnus substep inside one smooth piece of the curve
    detail::split_at_breakpoints(curve, t, te, cuts);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const double hh = cuts[c + 1] - cuts[c];
      if (!(hh > 0.0)) continue;
      const SU11Vector xi1 =
          connection_form(curve.eval(cuts[c] + c1 * hh).vel, l);
      const SU11Vector xi2 =
          connection_form(curve.eval(cuts[c] + c2 * hh).vel, l);
      const SU11Vector omega = (-0.5 * hh) * (xi1 + xi2) +
                               (-std::sqrt(3.0) * hh * hh / 12.0) *
                                   bracket(xi1, xi2);
      if (!std::isfinite(omega.gamma) || !std::isfinite(omega.beta.real()) ||
          !std::isfinite(omega.beta.imag()))
        throw NumericError("holonomy: non-finite connection sample");
      g = su11_exp(omega).compose(g);
      g.normalize();
    }
  }
  return g;
}

MagnusTerms magnus_terms(const Moments& m, double l) {
  MagnusTerms r;
  r.u1 = SU11Vector{};
  r.u2 = SU11Vector::from_basis(0.0, 0.0, m.area / (2.0 * l * l));
  const double l3 = 2.0 * l * l * l;
  r.u3 = SU11Vector::from_basis(m.my / l3, -m.mx / l3, 0.0);
  r.u4 = SU11Vector::from_basis(0.0, 0.0, m.m2 / (4.0 * l * l * l * l));
  r.exp_sum = su11_exp(r.u1 + r.u2 + r.u3 + r.u4);
  return r;
}

SU11Vector magnus_u1(const Curve& curve, double l) {
  const Vec2 d = curve.position(curve.duration()) - curve.position(0.0);
  return SU11Vector::from_basis(-d.x / (2.0 * l), -d.y / (2.0 * l), 0.0);
}

Moments shift_moments(const Moments& m, Vec2 base) {
  Moments r;
  r.area = m.area;
  r.mx = m.mx - base.x * m.area;
  r.my = m.my - base.y * m.area;
  r.m2 = m.m2 - 2.0 * (base.x * m.mx + base.y * m.my) +
         (base.x * base.x + base.y * base.y) * m.area;
  return r;
}

double predicted_delta_theta(const MagnusTerms& terms, double theta0) {
  return act(terms.exp_sum, theta0) - theta0;
}

}  // namespace prytz
