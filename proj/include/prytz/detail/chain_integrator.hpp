#pragma once

#include <cstddef>
#include <vector>

#include "prytz/curve.hpp"

namespace prytz::detail {

// Derivative of the coupled trailer-angle system at curve parameter t.
// theta/dtheta hold n entries; link i is driven by the far end of link i-1
// (link 0 by the tracer curve itself):
//   dtheta[i] = (sin(theta[i]) * ux - cos(theta[i]) * uy) / l[i]
// where (ux, uy) is the velocity of the driving end. A single link is the
// plain planimeter lift.
void chain_rhs(const Curve& curve, double t, Side side,
               const std::vector<double>& lengths, const double* theta,
               double* dtheta);

// Angles recorded whenever an integration substep lands on an interior
// breakpoint of the curve: times strictly inside (0, duration), with the
// n link angles per entry, row-major.
struct CornerLog {
  std::vector<double> t;
  std::vector<double> angles;
};

// Classical fixed-step RK4 on the chain angles, sampled on the uniform grid
// duration/steps. Steps that straddle a curve breakpoint are split there
// into aligned substeps and velocities at piece boundaries are taken
// one-sided, so piecewise-smooth tracer curves keep full order. The grid and
// the splits depend only on the curve and the step count, so results are
// reproducible bit for bit. Returns (steps+1) * n angles, row-major by
// sample. Throws NumericError on non-finite values.
std::vector<double> integrate_chain(const Curve& curve,
                                    const std::vector<double>& lengths,
                                    const std::vector<double>& theta0,
                                    std::size_t steps,
                                    CornerLog* corner_log = nullptr);

// Sub-interval boundaries for one integration step [t0, t1]: t0, every curve
// breakpoint strictly inside, then t1.
void split_at_breakpoints(const Curve& curve, double t0, double t1,
                          std::vector<double>& cuts);

// Composite Simpson on uniformly spaced samples (3/8 rule absorbs an odd
// final interval).
double simpson_uniform(const std::vector<double>& f, double h);

}  // namespace prytz::detail
