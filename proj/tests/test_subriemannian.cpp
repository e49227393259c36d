#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "prytz/geodesic.hpp"
#include "prytz/moments.hpp"
#include "prytz/planimeter.hpp"
#include "prytz/planner.hpp"

using namespace prytz;

namespace {

constexpr double kPi = std::numbers::pi;

// Reference RK4 for the reduced second-order angle equation.
double integrate_reduced(double theta0, double theta_dot0, double px, double py,
                         double l, double T, std::size_t steps) {
  double th = theta0, w = theta_dot0;
  const double h = T / static_cast<double>(steps);
  auto acc = [&](double a) { return reduced_theta_accel(a, px, py, l); };
  for (std::size_t i = 0; i < steps; ++i) {
    const double k1t = w, k1w = acc(th);
    const double k2t = w + 0.5 * h * k1w, k2w = acc(th + 0.5 * h * k1t);
    const double k3t = w + 0.5 * h * k2w, k3w = acc(th + 0.5 * h * k2t);
    const double k4t = w + h * k3w, k4w = acc(th + h * k3t);
    th += h / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
    w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
  }
  return th;
}

}  // namespace

TEST_SUITE_BEGIN("subriemannian");

TEST_CASE("hamiltonian values") {
  CHECK(hamiltonian({1, 2, 0.5, 0, 0, 0, 2.0}) == 0.0);
  CHECK(hamiltonian({0, 0, 0.9, 1, 0, 0, 2.0}) == doctest::Approx(0.5).epsilon(1e-15));

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const CotangentState s{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng),
                           0.5 + std::abs(u(rng))};
    const double px_bar = s.px + std::sin(s.theta) * s.ptheta / s.l;
    const double py_bar = s.py - std::cos(s.theta) * s.ptheta / s.l;
    const double squared = 0.5 * (px_bar * px_bar + py_bar * py_bar);
    CHECK(hamiltonian(s) == doctest::Approx(squared).epsilon(1e-14));
  }
}

TEST_CASE("zero angular momentum gives straight-line flow matching the lift") {
  const CotangentState s0{0.2, -0.1, 0.8, 0.6, 0.45, 0.0, 5.0};
  const double T = 8.0;
  const auto traj = geodesic(s0, T, 40000);

  for (std::size_t i = 0; i < traj.size(); i += 1000) {
    const auto& s = traj[i].state;
    CHECK(s.ptheta == 0.0);  // exactly preserved
    CHECK(s.px == 0.6);
    CHECK(s.py == 0.45);
    CHECK(std::abs(s.x - (0.2 + 0.6 * traj[i].t)) <= 1e-10);
    CHECK(std::abs(s.y - (-0.1 + 0.45 * traj[i].t)) <= 1e-10);
  }

  const auto line = make_segment({0.2, -0.1}, {0.2 + 0.6 * T, -0.1 + 0.45 * T}, T);
  const auto path = lift(line, 0.8, 5.0, 40000);
  double dmax = 0.0;
  for (std::size_t i = 0; i < path.size(); ++i)
    dmax = std::max(dmax, std::abs(path[i].theta - traj[i].state.theta));
  CHECK(dmax <= 1e-8);
}

TEST_CASE("energy and linear momenta are conserved") {
  const CotangentState s0{0, 0, 0.3, 0.8, -0.4, 0.7, 1.0};
  const auto traj = geodesic(s0, 10.0, 100000);
  const double h0 = hamiltonian(s0);
  double drift = 0.0;
  for (const auto& g : traj) {
    drift = std::max(drift, std::abs(hamiltonian(g.state) - h0));
    CHECK(g.state.px == 0.8);
    CHECK(g.state.py == -0.4);
  }
  CHECK(drift <= 1e-10);
}

TEST_CASE("normal geodesics stay horizontal") {
  const CotangentState s0{0, 0, 1.1, 0.5, 0.3, -0.6, 2.0};
  const auto traj = geodesic(s0, 6.0, 20000);
  for (std::size_t i = 0; i < traj.size(); i += 500) {
    const auto& s = traj[i].state;
    const double st = std::sin(s.theta), ct = std::cos(s.theta);
    const double xdot = s.px + st * s.ptheta / s.l;
    const double ydot = s.py - ct * s.ptheta / s.l;
    const double thdot = s.ptheta / (s.l * s.l) + (st * s.px - ct * s.py) / s.l;
    CHECK(std::abs(-st * xdot + ct * ydot + s.l * thdot) <= 1e-13);
  }
}

TEST_CASE("reduced acceleration") {
  CHECK(reduced_theta_accel(0.7, 0.0, 0.0, 2.0) == 0.0);
  // px = py: the cross term is the whole story
  for (double th : {0.2, 1.0, -0.6}) {
    const double p = 0.8;
    CHECK(reduced_theta_accel(th, p, p, 2.0) ==
          doctest::Approx(-(p * p / 4.0) * std::cos(2.0 * th)).epsilon(1e-14));
  }

  // second difference of θ from the full flow matches the formula at O(h²)
  const CotangentState s0{0, 0, 0.4, 0.9, -0.3, 0.5, 1.5};
  auto fd_error = [&](std::size_t steps) {
    const auto traj = geodesic(s0, 2.0, steps);
    const double h = 2.0 / static_cast<double>(steps);
    double emax = 0.0;
    for (std::size_t i = 1; i + 1 < traj.size(); i += 7) {
      const double fd = (traj[i + 1].state.theta - 2.0 * traj[i].state.theta +
                         traj[i - 1].state.theta) /
                        (h * h);
      const auto& s = traj[i].state;
      emax = std::max(emax,
                      std::abs(fd - reduced_theta_accel(s.theta, s.px, s.py, s.l)));
    }
    return emax;
  };
  const double e1 = fd_error(2000), e2 = fd_error(4000);
  CHECK(e1 <= 1e-5);
  CHECK(e2 <= e1 / 3.0);  // O(h²)
}

TEST_CASE("reduced equation reproduces the full system at fourth order") {
  const CotangentState s0{0, 0, 0.4, 0.9, -0.3, 0.5, 1.5};
  const double T = 3.0;
  const double theta_dot0 =
      s0.ptheta / (s0.l * s0.l) +
      (std::sin(s0.theta) * s0.px - std::cos(s0.theta) * s0.py) / s0.l;
  const double reference = geodesic(s0, T, 400000).back().state.theta;
  auto err = [&](std::size_t n) {
    return std::abs(integrate_reduced(s0.theta, theta_dot0, s0.px, s0.py, s0.l,
                                      T, n) -
                    reference);
  };
  const double e1 = err(125), e2 = err(250);
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.3));
}

TEST_CASE("planner trivial and example cases") {
  const Config at{0.4, -0.2, 1.0, 5.0};
  const PlanResult none = plan(at, at, 1e-9, 20);
  CHECK(none.curves.empty());
  CHECK(none.loops.empty());
  CHECK(none.residual <= 1e-9);

  const Config from{0, 0, 0, 5.0};
  const Config to{0, 0, 0.04, 5.0};
  const PlanResult res = plan(from, to, 1e-6, 20);
  CHECK(res.initial_radius_guess ==
        doctest::Approx(5.0 * std::sqrt(0.04 / kPi)).epsilon(1e-12));
  CHECK(res.initial_radius_guess == doctest::Approx(0.564).epsilon(2e-3));
  CHECK(res.loops.size() <= 6);
  CHECK(res.residual <= 1e-6);
  CHECK(std::abs(res.final_config.theta - 0.04) <= 1e-6);
  for (const auto& lp : res.loops) CHECK(lp.ccw);

  // opposite deficit flips the loop orientation
  const PlanResult neg = plan(from, {0, 0, -0.04, 5.0}, 1e-6, 20);
  CHECK(!neg.loops.empty());
  for (const auto& lp : neg.loops) CHECK_FALSE(lp.ccw);
}

TEST_CASE("planner replay lands on the target") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> pos(-2.0, 2.0), ang(-kPi, kPi);
  for (int rep = 0; rep < 5; ++rep) {
    const Config from{pos(rng), pos(rng), ang(rng), 5.0};
    const Config to{pos(rng), pos(rng), ang(rng), 5.0};
    const PlanResult res = plan(from, to, 1e-6, 20);
    CHECK(res.residual <= 1e-6);

    double theta = from.theta;
    for (const auto& curve : res.curves)
      theta = lift(curve, theta, 5.0, 8192).back().theta;
    CHECK(std::abs(std::remainder(theta - to.theta, 2.0 * kPi)) <= 1e-6);
    CHECK(theta == res.final_config.theta);  // replay is bit-reproducible
  }
}

TEST_CASE("planner reports non-convergence with its best state") {
  const Config from{0, 0, 0, 5.0};
  const Config to{1, 0, 2.0, 5.0};
  CHECK_THROWS_AS(plan(from, to, 1e-9, 0), PlannerConvergenceError);
  try {
    plan(from, to, 1e-9, 0);
  } catch (const PlannerConvergenceError& e) {
    CHECK(e.best.curves.size() == 1);  // the straight segment was executed
    CHECK(e.best.residual > 1e-9);
  }
}

TEST_SUITE_END();
