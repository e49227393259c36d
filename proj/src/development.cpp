#include "prytz/development.hpp"

#include <cmath>
#include <stdexcept>

#include "prytz/detail/chain_integrator.hpp"
#include "prytz/errors.hpp"

namespace prytz {

SE2Vector pseudoconnection(const Config& at, double vx, double vy,
                           double vtheta) {
  const double st = std::sin(at.theta), ct = std::cos(at.theta);
  const double l = at.l;
  const double along = ct * vx + st * vy;
  return {l * ct * along - l * st * vtheta, l * st * along + l * ct * vtheta,
          l * vtheta - st * vx + ct * vy};
}

Vec2 chisel_velocity(double theta, Vec2 v) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double along = ct * v.x + st * v.y;
  return {along * ct, along * st};
}

DevelopmentPath develop(const Curve::Ptr& curve, double theta0, double l,
                        std::size_t steps) {
  if (!curve) throw std::invalid_argument("develop: null curve");
  if (!(l > 0.0)) throw std::invalid_argument("develop: rod length must be positive");
  if (steps < 1) throw std::invalid_argument("develop: steps must be >= 1");

  struct State {
    double theta;
    Vec2 q;
  };
  auto rhs = [&](double t, Side side, const State& s) -> State {
    const CurveSample cs = curve->eval(t, side);
    const double dtheta =
        (std::sin(s.theta) * cs.vel.x - std::cos(s.theta) * cs.vel.y) / l;
    return {dtheta, chisel_velocity(s.theta, cs.vel)};
  };

  const double T = curve->duration();
  const double h = T / static_cast<double>(steps);
  const Vec2 p0 = curve->position(0.0);
  State y{theta0, {p0.x + l * std::cos(theta0), p0.y + l * std::sin(theta0)}};

  DevelopmentPath out;
  out.t.resize(steps + 1);
  out.chisel.resize(steps + 1);
  out.frame_rotation.resize(steps + 1);
  out.t[0] = 0.0;
  out.chisel[0] = y.q;
  out.frame_rotation[0] = 0.0;

  auto axpy = [](const State& s, double a, const State& d) -> State {
    return {s.theta + a * d.theta, s.q + a * d.q};
  };
  auto rk4_substep = [&](double a, double b) {
    const double hh = b - a;
    if (!(hh > 0.0)) return;
    const State k1 = rhs(a, Side::right, y);
    const State k2 = rhs(a + 0.5 * hh, Side::right, axpy(y, 0.5 * hh, k1));
    const State k3 = rhs(a + 0.5 * hh, Side::right, axpy(y, 0.5 * hh, k2));
    const State k4 = rhs(b, Side::left, axpy(y, hh, k3));
    y.theta += hh / 6.0 * (k1.theta + 2.0 * k2.theta + 2.0 * k3.theta + k4.theta);
    y.q += hh / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
  };

  std::vector<double> cuts;
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = h * static_cast<double>(i);
    const double te = h * static_cast<double>(i + 1);
    detail::split_at_breakpoints(*curve, t, te, cuts);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c)
      rk4_substep(cuts[c], cuts[c + 1]);
    if (!std::isfinite(y.theta) || !std::isfinite(y.q.x) || !std::isfinite(y.q.y))
      throw NumericError("develop: non-finite state");
    out.t[i + 1] = te;
    out.chisel[i + 1] = y.q;
    out.frame_rotation[i + 1] = y.theta - theta0;
  }
  return out;
}

ChainPath::ChainPath(std::size_t links, std::size_t samples)
    : links_(links), samples_(samples) {
  t_.resize(samples);
  angles_.resize(samples * links);
  joints_.resize(samples * (links + 1));
}

ChainPath chain_lift(const Curve::Ptr& curve, const TrailerChain& chain,
                     std::size_t steps) {
  if (!curve) throw std::invalid_argument("chain_lift: null curve");
  const std::size_t n = chain.lengths.size();
  if (n < 1 || chain.theta0.size() != n)
    throw std::invalid_argument("chain_lift: chain needs matching lengths and angles");

  const std::vector<double> angles =
      detail::integrate_chain(*curve, chain.lengths, chain.theta0, steps);

  const double h = curve->duration() / static_cast<double>(steps);
  ChainPath out(n, steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = h * static_cast<double>(k);
    const Side side = (k == steps) ? Side::left : Side::right;
    out.t_[k] = t;
    Vec2 u = curve->eval(t, side).pos;
    out.joints_[k * (n + 1)] = u;
    for (std::size_t i = 0; i < n; ++i) {
      const double th = angles[k * n + i];
      out.angles_[k * n + i] = th;
      u = {u.x + chain.lengths[i] * std::cos(th),
           u.y + chain.lengths[i] * std::sin(th)};
      out.joints_[k * (n + 1) + i + 1] = u;
    }
  }
  return out;
}

}  // namespace prytz
