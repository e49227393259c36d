#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "prytz/curve.hpp"
#include "prytz/planimeter.hpp"

namespace prytz {

struct PlannerLoop {
  double radius = 0.0;
  bool ccw = true;
  double dtheta = 0.0;  // measured rotation of the executed loop
};

struct PlanResult {
  std::vector<Curve::Ptr> curves;  // executed tracer curves, in order
  std::vector<PlannerLoop> loops;
  Config final_config;
  double residual = 0.0;               // |θ − nearest target representative|
  double initial_radius_guess = 0.0;   // l·sqrt(|Δθ|/π) before any loop
};

// Thrown when the loop budget runs out; carries the best plan so far.
struct PlannerConvergenceError : std::runtime_error {
  PlanResult best;
  explicit PlannerConvergenceError(PlanResult b)
      : std::runtime_error("planner: loop budget exhausted before reaching tolerance"),
        best(std::move(b)) {}
};

// Steers between configurations using planimeter motions only: a straight
// tracer segment to the target position (lifting θ along it), then full
// circular tracer loops anchored at the target position. Each loop's radius
// is solved by geometric bracketing plus a secant/bisection hybrid on the
// lifted Δθ, starting from the area guess R = l·sqrt(|Δθ|/π). The angle is
// matched to the 2π-representative of the target nearest the current θ.
PlanResult plan(const Config& from, const Config& to, double tol,
                std::size_t max_loops, std::size_t steps_per_curve = 8192);

}  // namespace prytz
