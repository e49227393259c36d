#pragma once

#include <cstddef>
#include <vector>

#include "prytz/curve.hpp"

namespace prytz {

// A planimeter configuration: tracer position, rod angle (stored unwrapped
// on the real line) and rod length. The chisel end is a derived quantity,
// so the rod length constraint holds by construction.
struct Config {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;  // unwrapped, radians
  double l = 1.0;

  Vec2 pos() const { return {x, y}; }
  Vec2 chisel() const {
    return {x + l * std::cos(theta), y + l * std::sin(theta)};
  }
};

struct PathSample {
  double t = 0.0;
  Vec2 pos;          // tracer position, read from the curve
  Vec2 vel;          // tracer velocity, read from the curve
  double theta = 0.0;      // unwrapped
  double theta_dot = 0.0;  // (sinθ·ẋ − cosθ·ẏ)/l at this sample
};

// Rod angle at a tracer-curve corner lying strictly inside the grid.
struct CornerAngle {
  double t = 0.0;
  double theta = 0.0;
};

// Time series of lifted states on a uniform grid. Tracer coordinates are
// always evaluated from the source curve, never integrated, so the holonomic
// coordinates carry no drift. Immutable after construction.
class PlanimeterPath {
 public:
  PlanimeterPath(Curve::Ptr source, double rod_length,
                 std::vector<PathSample> samples,
                 std::vector<CornerAngle> corners = {});

  double rod_length() const { return l_; }
  const Curve::Ptr& source() const { return source_; }
  std::size_t size() const { return samples_.size(); }
  std::size_t steps() const { return samples_.size() - 1; }
  double step_size() const { return h_; }
  const PathSample& operator[](std::size_t i) const { return samples_[i]; }
  const std::vector<PathSample>& samples() const { return samples_; }
  const PathSample& front() const { return samples_.front(); }
  const PathSample& back() const { return samples_.back(); }

  Config config_at(std::size_t i) const {
    const PathSample& s = samples_[i];
    return {s.pos.x, s.pos.y, s.theta, l_};
  }
  Vec2 chisel_at(std::size_t i) const {
    const PathSample& s = samples_[i];
    return {s.pos.x + l_ * std::cos(s.theta), s.pos.y + l_ * std::sin(s.theta)};
  }
  Vec2 chisel_vel_at(std::size_t i) const {
    const PathSample& s = samples_[i];
    return {s.vel.x - l_ * s.theta_dot * std::sin(s.theta),
            s.vel.y + l_ * s.theta_dot * std::cos(s.theta)};
  }
  // Angles at tracer-curve corners between grid nodes; path integrals split
  // there because chisel velocities jump across corners.
  const std::vector<CornerAngle>& corners() const { return corners_; }

 private:
  Curve::Ptr source_;
  double l_;
  double h_;
  std::vector<PathSample> samples_;
  std::vector<CornerAngle> corners_;
};

// Horizontal lift of a tracer curve: classical RK4 with fixed step
// duration/steps on  θ̇ = (sinθ·ẋ − cosθ·ẏ)/l,  θ(0) = theta0.
// Throws NumericError if the state turns non-finite.
PlanimeterPath lift(const Curve::Ptr& curve, double theta0, double l,
                    std::size_t steps = 100000);

// θ(T) − θ(0), on the unwrapped angle.
double delta_theta(const PlanimeterPath& path);

// Area estimate l²·Δθ.
double area_estimate_angle(const PlanimeterPath& path);

// Area estimate l·d with d = |q(0) − q(T)| the chisel chord.
double area_estimate_chord(const PlanimeterPath& path);

// Signed area swept by the moving rod. The ruled surface
// S(t,s) = (1−s)p(t) + s q(t) has Jacobian det(∂S/∂t, ∂S/∂s); integrating
// s over [0,1] first leaves the line integral
//   A_seg = ∫ 1/2 det(ṗ + q̇, q − p) dt,
// evaluated by composite Simpson on the path grid, split at nodes where the
// tracer curve has a corner.
double swept_area(const PlanimeterPath& path);

// Green line integral 1/2 ∫ (x dy − y dx) along the sampled chisel path
// (open in general).
double chisel_path_green(const PlanimeterPath& path);

// Signed area enclosed by the chisel path closed with the circular arc of
// radius l about p(0) from q(T) back to q(0): Green's integral along the
// sampled chisel path plus the analytic arc term. Requires a closed tracer.
double chisel_closure_area(const PlanimeterPath& path);

// Vertical projection of a tangent vector (vx, vy, vtheta) at a
// configuration: the coefficient of ∂/∂θ in Φ(v) = (η(v)/l)·∂/∂θ with
// η = −sinθ dx + cosθ dy + l dθ. Horizontal vectors map to zero and the
// projection is idempotent.
double horizontal_project(const Config& at, double vx, double vy,
                          double vtheta);

// Δθ for lifting the counterclockwise axis-aligned square of side eps
// anchored at the origin. Tends to eps²/l² as eps → 0.
double small_square_holonomy(double eps, double theta0, double l,
                             std::size_t steps = 4096);

}  // namespace prytz
