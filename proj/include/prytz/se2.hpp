#pragma once

#include <array>

#include "prytz/vec2.hpp"

namespace prytz {

// Element of se(2) in the basis
//   e1 = [[0,0,0],[1,0,0],[0,0,0]]   (translation x)
//   e2 = [[0,0,0],[0,0,0],[1,0,0]]   (translation y)
//   e3 = [[0,0,0],[0,0,-1],[0,1,0]]  (rotation)
// acting on homogeneous column vectors (1, x, y). Bracket table:
// [e3,e1] = e2, [e3,e2] = −e1, [e1,e2] = 0.
struct SE2Vector {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  std::array<std::array<double, 3>, 3> matrix() const {
    return {{{0.0, 0.0, 0.0}, {c1, 0.0, -c3}, {c2, c3, 0.0}}};
  }
};

inline SE2Vector operator+(SE2Vector a, SE2Vector b) {
  return {a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3};
}
inline SE2Vector operator*(double s, SE2Vector v) {
  return {s * v.c1, s * v.c2, s * v.c3};
}

SE2Vector se2_bracket(SE2Vector a, SE2Vector b);

// Planar rigid motion: rotation by `angle` followed by translation.
struct SE2Element {
  double angle = 0.0;
  Vec2 t;

  static SE2Element identity() { return {}; }
  Vec2 apply(Vec2 p) const;
  SE2Element compose(const SE2Element& rhs) const;  // this ∘ rhs
  SE2Element inverse() const;
};

}  // namespace prytz
