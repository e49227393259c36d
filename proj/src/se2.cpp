#include "prytz/se2.hpp"

#include <cmath>

namespace prytz {

SE2Vector se2_bracket(SE2Vector a, SE2Vector b) {
  return {a.c2 * b.c3 - a.c3 * b.c2, a.c3 * b.c1 - a.c1 * b.c3, 0.0};
}

Vec2 SE2Element::apply(Vec2 p) const {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y};
}

SE2Element SE2Element::compose(const SE2Element& rhs) const {
  const double c = std::cos(angle), s = std::sin(angle);
  return {angle + rhs.angle,
          {t.x + c * rhs.t.x - s * rhs.t.y, t.y + s * rhs.t.x + c * rhs.t.y}};
}

SE2Element SE2Element::inverse() const {
  const double c = std::cos(angle), s = std::sin(angle);
  return {-angle, {-(c * t.x + s * t.y), -(-s * t.x + c * t.y)}};
}

}  // namespace prytz
