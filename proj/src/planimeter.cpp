#include "prytz/planimeter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "prytz/detail/chain_integrator.hpp"
#include "prytz/errors.hpp"

namespace prytz {

PlanimeterPath::PlanimeterPath(Curve::Ptr source, double rod_length,
                               std::vector<PathSample> samples,
                               std::vector<CornerAngle> corners)
    : source_(std::move(source)),
      l_(rod_length),
      samples_(std::move(samples)),
      corners_(std::move(corners)) {
  if (!(l_ > 0.0)) throw std::invalid_argument("path: rod length must be positive");
  if (samples_.size() < 2)
    throw std::invalid_argument("path: needs at least two samples");
  h_ = samples_[1].t - samples_[0].t;
}

PlanimeterPath lift(const Curve::Ptr& curve, double theta0, double l,
                    std::size_t steps) {
  if (!curve) throw std::invalid_argument("lift: null curve");
  const std::vector<double> lengths{l};
  const std::vector<double> init{theta0};
  detail::CornerLog log;
  const std::vector<double> angles =
      detail::integrate_chain(*curve, lengths, init, steps, &log);

  const double h = curve->duration() / static_cast<double>(steps);
  std::vector<PathSample> samples(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = h * static_cast<double>(i);
    const Side side = (i == steps) ? Side::left : Side::right;
    const CurveSample cs = curve->eval(t, side);
    if (!std::isfinite(cs.pos.x) || !std::isfinite(cs.pos.y) ||
        !std::isfinite(cs.vel.x) || !std::isfinite(cs.vel.y))
      throw NumericError("lift: non-finite curve evaluation");
    const double th = angles[i];
    samples[i] = {t, cs.pos, cs.vel, th,
                  (std::sin(th) * cs.vel.x - std::cos(th) * cs.vel.y) / l};
  }
  std::vector<CornerAngle> corners(log.t.size());
  for (std::size_t i = 0; i < log.t.size(); ++i)
    corners[i] = {log.t[i], log.angles[i]};
  return PlanimeterPath(curve, l, std::move(samples), std::move(corners));
}

double delta_theta(const PlanimeterPath& path) {
  return path.back().theta - path.front().theta;
}

double area_estimate_angle(const PlanimeterPath& path) {
  const double l = path.rod_length();
  return l * l * delta_theta(path);
}

double area_estimate_chord(const PlanimeterPath& path) {
  const Vec2 d = path.chisel_at(0) - path.chisel_at(path.size() - 1);
  return path.rod_length() * norm(d);
}

namespace {

// Integration span boundary at a tracer-curve corner. Path integrands jump
// at corners (the chisel velocity flips with the tracer velocity), so the
// quadrature must not let a panel straddle one.
struct SpanCut {
  double t = 0.0;
  double theta = 0.0;
  bool aligned = false;   // sits exactly on a grid node
  std::size_t node = 0;   // valid when aligned
};

std::vector<SpanCut> span_cuts(const PlanimeterPath& path) {
  std::vector<SpanCut> cuts;
  if (!path.source()) return cuts;
  const double h = path.step_size();
  const std::size_t last = path.size() - 1;
  const double T = path[last].t;
  const double tol =
      64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, T);
  for (double b : path.source()->breakpoints()) {
    if (b <= tol || b >= T - tol) continue;
    const auto i = static_cast<std::size_t>(std::llround(b / h));
    if (i > 0 && i < last && std::abs(b - h * static_cast<double>(i)) <= tol) {
      cuts.push_back({h * static_cast<double>(i), path[i].theta, true, i});
      continue;
    }
    for (const CornerAngle& c : path.corners()) {
      if (std::abs(c.t - b) <= tol) {
        cuts.push_back({c.t, c.theta, false, 0});
        break;
      }
    }
  }
  std::sort(cuts.begin(), cuts.end(),
            [](const SpanCut& a, const SpanCut& b) { return a.t < b.t; });
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [tol](const SpanCut& a, const SpanCut& b) {
                           return std::abs(a.t - b.t) <= tol;
                         }),
             cuts.end());
  return cuts;
}

// Piecewise quadrature over the sample grid: composite Simpson inside each
// smooth span, one-sided values where a span closes on a grid node, and
// sub-h trapezoids against corners that fall between nodes (their O(w³)
// error is far below the Simpson budget).
template <class F>
double piecewise_integral(const PlanimeterPath& path, F&& integrand) {
  const double h = path.step_size();
  const std::size_t last = path.size() - 1;
  const double T = path[last].t;
  const double tol =
      64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, T);
  const std::vector<SpanCut> cuts = span_cuts(path);

  auto synth = [&](double t, double theta, Side side) -> PathSample {
    const CurveSample cs = path.source()->eval(t, side);
    return {t, cs.pos, cs.vel, theta,
            (std::sin(theta) * cs.vel.x - std::cos(theta) * cs.vel.y) /
                path.rod_length()};
  };

  double total = 0.0;
  std::vector<double> vals;
  auto span = [&](const SpanCut* ca, const SpanCut* cb) {
    const double a = ca ? ca->t : 0.0;
    const double b = cb ? cb->t : T;
    if (!(b - a > tol)) return;

    std::size_t i0, i1;
    if (!ca) i0 = 0;
    else if (ca->aligned) i0 = ca->node;
    else i0 = static_cast<std::size_t>(std::floor((a + tol) / h)) + 1;
    if (!cb) i1 = last;
    else if (cb->aligned) i1 = cb->node;
    else i1 = static_cast<std::size_t>(std::ceil((b - tol) / h)) - 1;

    if (i0 > i1 || i0 > last) {
      // no grid node inside: single narrow trapezoid
      const double fa = integrand(synth(a, ca->theta, Side::right));
      const double fb = integrand(synth(b, cb->theta, Side::left));
      total += 0.5 * (b - a) * (fa + fb);
      return;
    }

    vals.clear();
    vals.reserve(i1 - i0 + 1);
    for (std::size_t i = i0; i <= i1; ++i) {
      if (i == i1 && cb && cb->aligned)
        vals.push_back(integrand(synth(path[i].t, path[i].theta, Side::left)));
      else
        vals.push_back(integrand(path[i]));
    }
    if (ca && !ca->aligned) {
      const double w = path[i0].t - a;
      if (w > tol)
        total += 0.5 * w *
                 (integrand(synth(a, ca->theta, Side::right)) + vals.front());
    }
    if (cb && !cb->aligned) {
      const double w = b - path[i1].t;
      if (w > tol)
        total += 0.5 * w *
                 (vals.back() + integrand(synth(b, cb->theta, Side::left)));
    }
    if (i1 > i0) total += detail::simpson_uniform(vals, h);
  };

  if (cuts.empty()) {
    span(nullptr, nullptr);
  } else {
    span(nullptr, &cuts.front());
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) span(&cuts[j], &cuts[j + 1]);
    span(&cuts.back(), nullptr);
  }
  return total;
}

Vec2 chisel_of(const PathSample& s, double l) {
  return {s.pos.x + l * std::cos(s.theta), s.pos.y + l * std::sin(s.theta)};
}

Vec2 chisel_vel_of(const PathSample& s, double l) {
  return {s.vel.x - l * s.theta_dot * std::sin(s.theta),
          s.vel.y + l * s.theta_dot * std::cos(s.theta)};
}

}  // namespace

double swept_area(const PlanimeterPath& path) {
  const double l = path.rod_length();
  return piecewise_integral(path, [l](const PathSample& s) {
    const Vec2 rod = chisel_of(s, l) - s.pos;
    return 0.5 * cross(s.vel + chisel_vel_of(s, l), rod);
  });
}

double chisel_path_green(const PlanimeterPath& path) {
  const double l = path.rod_length();
  return piecewise_integral(path, [l](const PathSample& s) {
    return 0.5 * cross(chisel_of(s, l), chisel_vel_of(s, l));
  });
}

double chisel_closure_area(const PlanimeterPath& path) {
  const Vec2 p0 = path.front().pos;
  const Vec2 pT = path.back().pos;
  double scale = 1.0;
  if (path.source()) scale += path.source()->diameter();
  if (norm(pT - p0) > 1e-9 * scale)
    throw std::invalid_argument("chisel_closure_area: tracer curve is not closed");

  const double green_path = chisel_path_green(path);

  // Arc about p(0) from angle θ(T) back to θ(0):
  //   1/2 ∫ (x dy − y dx) = 1/2 l² (θ0 − θT)
  //                       + 1/2 l [p0x (sinθ0 − sinθT) − p0y (cosθ0 − cosθT)]
  const double l = path.rod_length();
  const double th0 = path.front().theta, thT = path.back().theta;
  const double arc =
      0.5 * l * l * (th0 - thT) +
      0.5 * l *
          (p0.x * (std::sin(th0) - std::sin(thT)) -
           p0.y * (std::cos(th0) - std::cos(thT)));
  return green_path + arc;
}

double horizontal_project(const Config& at, double vx, double vy,
                          double vtheta) {
  const double eta =
      -std::sin(at.theta) * vx + std::cos(at.theta) * vy + at.l * vtheta;
  return eta / at.l;
}

double small_square_holonomy(double eps, double theta0, double l,
                             std::size_t steps) {
  if (!(eps > 0.0)) throw std::invalid_argument("small_square_holonomy: eps must be positive");
  const auto square = make_polygon(
      {{0.0, 0.0}, {eps, 0.0}, {eps, eps}, {0.0, eps}});
  if (steps % 4 != 0) steps += 4 - steps % 4;  // corners on the grid
  return delta_theta(lift(square, theta0, l, steps));
}

}  // namespace prytz
