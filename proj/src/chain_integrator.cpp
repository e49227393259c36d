#include "prytz/detail/chain_integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "prytz/errors.hpp"

namespace prytz::detail {

void chain_rhs(const Curve& curve, double t, Side side,
               const std::vector<double>& lengths, const double* theta,
               double* dtheta) {
  const CurveSample s = curve.eval(t, side);
  double ux = s.vel.x, uy = s.vel.y;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const double st = std::sin(theta[i]), ct = std::cos(theta[i]);
    dtheta[i] = (st * ux - ct * uy) / lengths[i];
    // far end of this link drives the next one
    ux = ux + lengths[i] * dtheta[i] * (-st);
    uy = uy + lengths[i] * dtheta[i] * ct;
  }
}

void split_at_breakpoints(const Curve& curve, double t0, double t1,
                          std::vector<double>& cuts) {
  cuts.clear();
  cuts.push_back(t0);
  const double tol = 64.0 * std::numeric_limits<double>::epsilon() *
                     std::max(1.0, curve.duration());
  const auto& breaks = curve.breakpoints();
  auto lo = std::upper_bound(breaks.begin(), breaks.end(), t0 + tol);
  auto hi = std::lower_bound(breaks.begin(), breaks.end(), t1 - tol);
  for (auto it = lo; it != hi; ++it) cuts.push_back(*it);
  cuts.push_back(t1);
}

std::vector<double> integrate_chain(const Curve& curve,
                                    const std::vector<double>& lengths,
                                    const std::vector<double>& theta0,
                                    std::size_t steps, CornerLog* corner_log) {
  const std::size_t n = lengths.size();
  if (n == 0 || theta0.size() != n)
    throw std::invalid_argument("integrate_chain: mismatched link arrays");
  for (double l : lengths)
    if (!(l > 0.0)) throw std::invalid_argument("integrate_chain: link length must be positive");
  if (steps < 1) throw std::invalid_argument("integrate_chain: steps must be >= 1");

  const double T = curve.duration();
  const double h = T / static_cast<double>(steps);
  std::vector<double> out((steps + 1) * n);
  std::vector<double> y(theta0), tmp(n), k1(n), k2(n), k3(n), k4(n), cuts;
  for (std::size_t i = 0; i < n; ++i) out[i] = y[i];

  auto rk4_substep = [&](double a, double b) {
    const double hh = b - a;
    if (!(hh > 0.0)) return;
    chain_rhs(curve, a, Side::right, lengths, y.data(), k1.data());
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * hh * k1[i];
    chain_rhs(curve, a + 0.5 * hh, Side::right, lengths, tmp.data(), k2.data());
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * hh * k2[i];
    chain_rhs(curve, a + 0.5 * hh, Side::right, lengths, tmp.data(), k3.data());
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + hh * k3[i];
    chain_rhs(curve, b, Side::left, lengths, tmp.data(), k4.data());
    for (std::size_t i = 0; i < n; ++i)
      y[i] += hh / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  };

  for (std::size_t s = 0; s < steps; ++s) {
    const double t = h * static_cast<double>(s);
    const double te = h * static_cast<double>(s + 1);
    split_at_breakpoints(curve, t, te, cuts);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      rk4_substep(cuts[c], cuts[c + 1]);
      if (corner_log && c + 2 < cuts.size()) {
        corner_log->t.push_back(cuts[c + 1]);
        corner_log->angles.insert(corner_log->angles.end(), y.begin(), y.end());
      }
    }
    bool finite = true;
    for (std::size_t i = 0; i < n; ++i) {
      finite = finite && std::isfinite(y[i]);
      out[(s + 1) * n + i] = y[i];
    }
    if (!finite)
      throw NumericError("integrate_chain: non-finite state at t = " +
                         std::to_string(te));
  }
  return out;
}

double simpson_uniform(const std::vector<double>& f, double h) {
  const std::size_t n = f.size() >= 1 ? f.size() - 1 : 0;
  if (n == 0) return 0.0;
  if (n == 1) return 0.5 * h * (f[0] + f[1]);
  std::size_t even_part = n;
  double tail = 0.0;
  if (n % 2 == 1) {
    even_part = n - 3;
    const std::size_t b = even_part;
    tail = 3.0 * h / 8.0 * (f[b] + 3.0 * f[b + 1] + 3.0 * f[b + 2] + f[b + 3]);
  }
  double s = 0.0;
  if (even_part >= 2) {
    s = f[0] + f[even_part];
    for (std::size_t j = 1; j < even_part; ++j) s += f[j] * (j % 2 == 1 ? 4.0 : 2.0);
    s *= h / 3.0;
  }
  return s + tail;
}

}  // namespace prytz::detail
