#pragma once

#include <cstddef>
#include <vector>

#include "prytz/curve.hpp"
#include "prytz/planimeter.hpp"
#include "prytz/se2.hpp"

namespace prytz {

// Affine se(2)-valued pseudoconnection evaluated on a configuration-space
// tangent vector (vx, vy, vtheta) at `at`:
//   c1 = l cosθ (cosθ·vx + sinθ·vy) − l sinθ·vθ
//   c2 = l sinθ (cosθ·vx + sinθ·vy) + l cosθ·vθ
//   c3 = η(v) = l·vθ − sinθ·vx + cosθ·vy
// The rotational coefficient is the constraint form, so it annihilates
// horizontal vectors. Note: the translational coefficients carry an overall
// factor of l relative to the chisel-velocity projector below; develop()
// integrates the projector form, and this form is exposed for inspection.
SE2Vector pseudoconnection(const Config& at, double vx, double vy,
                           double vtheta);

// Chisel-end velocity induced by tracer velocity v at rod angle theta:
// the rank-one projection of v onto the rod direction (cosθ, sinθ).
Vec2 chisel_velocity(double theta, Vec2 v);

struct DevelopmentPath {
  std::vector<double> t;
  std::vector<Vec2> chisel;
  std::vector<double> frame_rotation;  // θ(t) − θ(0)
};

// Development of the tracer curve: co-integrates the rod angle and the
// chisel position (RK4, fixed step) from chisel_velocity along the lift.
DevelopmentPath develop(const Curve::Ptr& curve, double theta0, double l,
                        std::size_t steps = 100000);

// Kinematic trailer chain: link i hangs off the far end of link i−1.
struct TrailerChain {
  std::vector<double> lengths;
  std::vector<double> theta0;  // unwrapped initial angles
};

// Joint trajectories of a lifted chain on the shared uniform grid. Joint 0
// is the tracer; joint i is the far end of link i.
class ChainPath {
 public:
  ChainPath(std::size_t links, std::size_t samples);

  std::size_t links() const { return links_; }
  std::size_t size() const { return samples_; }
  double time_at(std::size_t k) const { return t_[k]; }
  // link index 1..n
  double angle_at(std::size_t link, std::size_t k) const {
    return angles_[k * links_ + (link - 1)];
  }
  // joint index 0..n
  Vec2 joint_at(std::size_t joint, std::size_t k) const {
    return joints_[k * (links_ + 1) + joint];
  }

  std::vector<double> t_;
  std::vector<double> angles_;  // samples × links
  std::vector<Vec2> joints_;    // samples × (links + 1)

 private:
  std::size_t links_;
  std::size_t samples_;
};

// Coupled RK4 on all trailer angles at once:
//   θ̇[i] = (sinθ[i]·u̇x[i−1] − cosθ[i]·u̇y[i−1]) / l[i]
// with u[0] the tracer curve. A single link reproduces lift() exactly.
ChainPath chain_lift(const Curve::Ptr& curve, const TrailerChain& chain,
                     std::size_t steps = 100000);

}  // namespace prytz
