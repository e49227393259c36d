#include "prytz/geodesic.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "prytz/errors.hpp"

namespace prytz {

double hamiltonian(const CotangentState& s) {
  return 0.5 * (s.px * s.px + s.py * s.py + s.ptheta * s.ptheta / (s.l * s.l)) +
         (std::sin(s.theta) * s.px - std::cos(s.theta) * s.py) * s.ptheta / s.l;
}

namespace {

using State6 = std::array<double, 6>;  // x, y, theta, px, py, ptheta

State6 rhs(const State6& s, double l) {
  const double st = std::sin(s[2]), ct = std::cos(s[2]);
  const double px = s[3], py = s[4], pt = s[5];
  return {px + st * pt / l,
          py - ct * pt / l,
          pt / (l * l) + (st * px - ct * py) / l,
          0.0,
          0.0,
          -(ct * px + st * py) * pt / l};
}

}  // namespace

std::vector<GeodesicSample> geodesic(const CotangentState& s0, double T,
                                     std::size_t steps) {
  if (steps < 1) throw std::invalid_argument("geodesic: steps must be >= 1");
  if (!(s0.l > 0.0)) throw std::invalid_argument("geodesic: rod length must be positive");
  if (!(T > 0.0)) throw std::invalid_argument("geodesic: duration must be positive");

  const double l = s0.l;
  const double h = T / static_cast<double>(steps);
  State6 y{s0.x, s0.y, s0.theta, s0.px, s0.py, s0.ptheta};

  std::vector<GeodesicSample> out(steps + 1);
  auto record = [&](std::size_t i, double t) {
    out[i] = {t, {y[0], y[1], y[2], y[3], y[4], y[5], l}};
  };
  record(0, 0.0);

  for (std::size_t i = 0; i < steps; ++i) {
    const State6 k1 = rhs(y, l);
    State6 tmp;
    for (int j = 0; j < 6; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
    const State6 k2 = rhs(tmp, l);
    for (int j = 0; j < 6; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
    const State6 k3 = rhs(tmp, l);
    for (int j = 0; j < 6; ++j) tmp[j] = y[j] + h * k3[j];
    const State6 k4 = rhs(tmp, l);
    bool finite = true;
    for (int j = 0; j < 6; ++j) {
      y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
      finite = finite && std::isfinite(y[j]);
    }
    if (!finite)
      throw NumericError("geodesic: non-finite state at step " +
                         std::to_string(i + 1));
    record(i + 1, h * static_cast<double>(i + 1));
  }
  return out;
}

double reduced_theta_accel(double theta, double px, double py, double l) {
  return ((px * px - py * py) * std::sin(2.0 * theta) -
          2.0 * px * py * std::cos(2.0 * theta)) /
         (2.0 * l * l);
}

}  // namespace prytz
