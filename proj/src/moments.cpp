#include "prytz/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prytz {

namespace {

struct Integrands {
  double area = 0.0, mx = 0.0, my = 0.0, m2 = 0.0;

  void accumulate(const CurveSample& s, double w) {
    const double x = s.pos.x, y = s.pos.y, vx = s.vel.x, vy = s.vel.y;
    area += w * 0.5 * (x * vy - y * vx);
    mx += w * 0.5 * x * x * vy;
    my += w * (-0.5) * y * y * vx;
    m2 += w * (x * x * x * vy - y * y * y * vx) / 3.0;
  }
};

}  // namespace

Moments moments(const Curve& curve, std::size_t samples) {
  if (!curve.closed())
    throw std::invalid_argument("moments: curve is not closed");
  if (samples < 8) samples = 8;

  const auto& breaks = curve.breakpoints();
  const double T = curve.duration();
  Integrands acc;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p], b = breaks[p + 1];
    const double span = b - a;
    if (span <= 0.0) continue;
    std::size_t n = static_cast<std::size_t>(
        std::llround(static_cast<double>(samples) * span / T));
    n = std::max<std::size_t>(n, 4);
    if (n % 2 == 1) ++n;  // Simpson needs an even interval count
    const double h = span / static_cast<double>(n);
    for (std::size_t j = 0; j <= n; ++j) {
      const double t = (j == n) ? b : a + h * static_cast<double>(j);
      const Side side = (j == n) ? Side::left : Side::right;
      double w = (j == 0 || j == n) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
      acc.accumulate(curve.eval(t, side), w * h / 3.0);
    }
  }
  return {acc.area, acc.mx, acc.my, acc.m2};
}

Vec2 centroid(const Curve& curve, std::size_t samples) {
  const Moments m = moments(curve, samples);
  const double d = curve.diameter();
  if (std::abs(m.area) <= 1e-12 * d * d)
    throw std::invalid_argument("centroid: degenerate region (area too small)");
  return {m.mx / m.area, m.my / m.area};
}

}  // namespace prytz
