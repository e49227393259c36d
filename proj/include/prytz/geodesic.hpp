#pragma once

#include <cstddef>
#include <vector>

namespace prytz {

// Point of the cotangent bundle over the configuration space, with the rod
// length carried along. px and py are first integrals of the flow.
struct CotangentState {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;  // unwrapped
  double px = 0.0;
  double py = 0.0;
  double ptheta = 0.0;
  double l = 1.0;
};

// H = 1/2 (px² + py² + pθ²/l²) + (sinθ·px − cosθ·py)·pθ/l,
// equal to 1/2 (P_X² + P_Y²) with P_X = px + sinθ·pθ/l, P_Y = py − cosθ·pθ/l.
double hamiltonian(const CotangentState& s);

struct GeodesicSample {
  double t = 0.0;
  CotangentState state;
};

// RK4 on the canonical equations
//   ẋ = px + sinθ·pθ/l        ṗx = 0
//   ẏ = py − cosθ·pθ/l        ṗy = 0
//   θ̇ = pθ/l² + (sinθ·px − cosθ·py)/l
//   ṗθ = −(cosθ·px + sinθ·py)·pθ/l
// Sampled on the uniform grid; throws NumericError on non-finite states.
std::vector<GeodesicSample> geodesic(const CotangentState& s0, double T,
                                     std::size_t steps);

// Angular acceleration of the reduced autonomous equation,
//   θ̈ = [(px² − py²)·sin 2θ − 2 px py·cos 2θ] / (2l²),
// obtained by differentiating θ̇ along the flow above.
double reduced_theta_accel(double theta, double px, double py, double l);

}  // namespace prytz
