#pragma once

#include "prytz/curve.hpp"

namespace prytz {

// Signed area and low-order moments of the region enclosed by a curve.
struct Moments {
  double area = 0.0;  // ∫∫ dA
  double mx = 0.0;    // ∫∫ x dA
  double my = 0.0;    // ∫∫ y dA
  double m2 = 0.0;    // ∫∫ (x² + y²) dA
};

// All four moments from one pass of boundary line integrals. The Green's
// reductions used, with dA = dx∧dy over the enclosed region:
//   area = 1/2 ∮ (x dy − y dx)
//   mx   = 1/2 ∮ x² dy
//   my   = −1/2 ∮ y² dx
//   m2   = 1/3 ∮ (x³ dy − y³ dx)
// Composite Simpson per smooth piece with `samples` nodes across the curve,
// so polygon edges (cubic integrands) are integrated exactly.
// Throws std::invalid_argument when the curve is not closed.
Moments moments(const Curve& curve, std::size_t samples = 4096);

// (mx/area, my/area). Throws std::invalid_argument when |area| is below
// 1e-12 * diameter² (degenerate region).
Vec2 centroid(const Curve& curve, std::size_t samples = 4096);

}  // namespace prytz
