#include "prytz/planner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace prytz {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;
}  // namespace

PlanResult plan(const Config& from, const Config& to, double tol,
                std::size_t max_loops, std::size_t steps_per_curve) {
  if (!(tol > 0.0)) throw std::invalid_argument("plan: tol must be positive");
  if (!(from.l > 0.0) || from.l != to.l)
    throw std::invalid_argument("plan: configurations must share a positive rod length");

  const double l = from.l;
  const Vec2 target = to.pos();
  PlanResult res;
  double theta = from.theta;

  if (norm(target - from.pos()) > 0.0) {
    auto seg = make_segment(from.pos(), target);
    theta = lift(seg, theta, l, steps_per_curve).back().theta;
    res.curves.push_back(seg);
  }

  // Angle deficit to the 2π-representative of the target nearest to θ.
  auto deficit = [&]() { return std::remainder(to.theta - theta, kTau); };

  const double d0 = deficit();
  res.initial_radius_guess = std::abs(d0) > 0.0 ? l * std::sqrt(std::abs(d0) / kPi) : 0.0;

  // Full circle anchored at the target position (starts and ends there).
  auto anchored = [&](double radius, bool ccw) {
    return make_circle({target.x + radius, target.y}, radius, ccw, kPi);
  };
  auto measure = [&](double radius, bool ccw) {
    return delta_theta(lift(anchored(radius, ccw), theta, l, steps_per_curve));
  };
  auto execute = [&](double radius, bool ccw) {
    auto loop = anchored(radius, ccw);
    const double dth = delta_theta(lift(loop, theta, l, steps_per_curve));
    theta += dth;
    res.curves.push_back(loop);
    res.loops.push_back({radius, ccw, dth});
  };
  auto finalize = [&]() {
    res.final_config = {target.x, target.y, theta, l};
    res.residual = std::abs(deficit());
  };

  while (std::abs(deficit()) > tol) {
    if (res.loops.size() >= max_loops) {
      finalize();
      throw PlannerConvergenceError(res);
    }
    const double d = deficit();
    const bool ccw = d > 0.0;
    const double sign = ccw ? 1.0 : -1.0;
    const double want = std::abs(d);

    // Bracket the radius; Δθ per loop is monotone in the radius within the
    // window, so widen geometrically until the target is enclosed.
    double lo = l * std::sqrt(want / kPi);
    double hi = lo;
    double flo = sign * measure(lo, ccw) - want;
    double fhi = flo;
    int guard = 0;
    if (flo > 0.0) {
      while (flo > 0.0 && guard++ < 60) {
        hi = lo;
        fhi = flo;
        lo *= 0.5;
        flo = sign * measure(lo, ccw) - want;
      }
    } else {
      while (fhi < 0.0 && guard++ < 60 && hi < 64.0 * l) {
        lo = hi;
        flo = fhi;
        hi *= 2.0;
        fhi = sign * measure(hi, ccw) - want;
      }
    }
    if (fhi < 0.0) {
      // One loop cannot absorb the whole deficit; take the largest and retry.
      execute(hi, ccw);
      continue;
    }
    if (flo > 0.0) {
      execute(lo, ccw);
      continue;
    }

    // Secant with bisection fallback on [lo, hi].
    double radius = 0.5 * (lo + hi);
    for (int it = 0; it < 80; ++it) {
      double cand = (fhi != flo) ? hi - fhi * (hi - lo) / (fhi - flo) : radius;
      if (!(cand > lo && cand < hi)) cand = 0.5 * (lo + hi);
      const double fc = sign * measure(cand, ccw) - want;
      radius = cand;
      if (std::abs(fc) <= 0.2 * tol || hi - lo <= 1e-15 * l) break;
      if (fc > 0.0) {
        hi = cand;
        fhi = fc;
      } else {
        lo = cand;
        flo = fc;
      }
    }
    execute(radius, ccw);
  }

  finalize();
  return res;
}

}  // namespace prytz
