#pragma once

#include <memory>
#include <vector>

#include "prytz/vec2.hpp"

namespace prytz {

struct CurveSample {
  Vec2 pos;
  Vec2 vel;  // exact parametric derivative
};

// Which one-sided derivative to report when the parameter lands exactly on a
// joint between smooth pieces. Positions are continuous across joints;
// velocities may jump.
enum class Side { left, right };

// Immutable parametric plane curve on [0, duration()]. Velocities are exact
// analytic derivatives of the parametrization; nothing is differenced
// numerically inside primitives. Safe for concurrent read-only use.
class Curve {
 public:
  using Ptr = std::shared_ptr<const Curve>;

  virtual ~Curve() = default;

  double duration() const { return duration_; }
  virtual double length() const = 0;

  // Axis-aligned bounds of the trace.
  virtual void bounds(Vec2& lo, Vec2& hi) const = 0;
  double diameter() const;

  // Endpoint test with a scale-invariant tolerance: the curve is closed when
  // |p(0) - p(T)| <= 1e-12 * (1 + diameter).
  bool closed() const;

  // Parameter values at which smoothness may break, including 0 and
  // duration(). Sorted and deduplicated.
  const std::vector<double>& breakpoints() const { return breaks_; }

  // Throws std::domain_error outside [0, duration()]. Parameters within a few
  // ulps of a breakpoint are snapped onto it so that one-sided dispatch stays
  // exact on integration grids.
  CurveSample eval(double t, Side side = Side::right) const;
  Vec2 position(double t) const { return eval(t).pos; }

 protected:
  explicit Curve(double duration);
  virtual CurveSample eval_impl(double t, Side side) const = 0;

  double duration_;
  std::vector<double> breaks_;
};

Curve::Ptr make_circle(Vec2 center, double radius, bool ccw = true,
                       double phase = 0.0, double duration = 1.0);
// 2n-gon alternating outer and inner radii, vertices at angles pi*k/n
// starting on the outer radius, traversed counterclockwise.
Curve::Ptr make_star(Vec2 center, int points, double outer_radius,
                     double inner_radius, double duration = 1.0);
Curve::Ptr make_polygon(std::vector<Vec2> vertices, double duration = 1.0);
Curve::Ptr make_segment(Vec2 from, Vec2 to, double duration = 1.0);
// Children are traversed in order and must meet continuously; parameter is
// allocated proportionally to arc length so traversal speed is uniform.
Curve::Ptr make_composite(std::vector<Curve::Ptr> children,
                          double duration = 1.0);
Curve::Ptr make_reversed(Curve::Ptr child);

// Closed loop: straight segment from start to the boundary's initial point,
// the full boundary, then the same segment retraced back to start.
Curve::Ptr prytz_loop(const Curve::Ptr& region_boundary, Vec2 start);

}  // namespace prytz
