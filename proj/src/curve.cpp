#include "prytz/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace prytz {

namespace {

constexpr double kPi = std::numbers::pi;

Side flip(Side s) { return s == Side::left ? Side::right : Side::left; }

// Locate the span [offsets[i], offsets[i+1]] containing t. Zero-width spans
// are never selected; at a shared boundary the side decides the neighbour.
std::size_t pick_span(const std::vector<double>& offsets, double t, Side side) {
  const std::size_t n = offsets.size() - 1;
  if (side == Side::right) {
    if (t >= offsets.back()) {
      for (std::size_t i = n; i-- > 0;)
        if (offsets[i] < offsets[i + 1]) return i;
      return 0;
    }
    auto it = std::upper_bound(offsets.begin(), offsets.end(), t);
    return static_cast<std::size_t>(it - offsets.begin()) - 1;
  }
  if (t <= offsets.front()) {
    for (std::size_t i = 0; i < n; ++i)
      if (offsets[i] < offsets[i + 1]) return i;
    return 0;
  }
  auto it = std::lower_bound(offsets.begin(), offsets.end(), t);
  return static_cast<std::size_t>(it - offsets.begin()) - 1;
}

// Parameter offsets proportional to the given weights; equal spans if all
// weights vanish (fully degenerate curve).
std::vector<double> proportional_offsets(const std::vector<double>& weights,
                                         double duration) {
  const std::size_t n = weights.size();
  std::vector<double> offsets(n + 1, 0.0);
  double total = 0.0;
  for (double w : weights) total += w;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += (total > 0.0) ? weights[i] : 1.0;
    const double denom = (total > 0.0) ? total : static_cast<double>(n);
    offsets[i + 1] = duration * (acc / denom);
  }
  offsets[n] = duration;
  return offsets;
}

void dedupe_sorted(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

class CircleCurve final : public Curve {
 public:
  CircleCurve(Vec2 center, double radius, bool ccw, double phase,
              double duration)
      : Curve(duration),
        center_(center),
        radius_(radius),
        dir_(ccw ? 1.0 : -1.0),
        phase_(phase) {
    if (!(radius > 0.0)) throw std::invalid_argument("circle: radius must be positive");
    if (!finite(center) || !std::isfinite(radius) || !std::isfinite(phase))
      throw std::invalid_argument("circle: geometry must be finite");
    breaks_ = {0.0, duration_};
  }

  double length() const override { return 2.0 * kPi * radius_; }

  void bounds(Vec2& lo, Vec2& hi) const override {
    lo = {center_.x - radius_, center_.y - radius_};
    hi = {center_.x + radius_, center_.y + radius_};
  }

 protected:
  CurveSample eval_impl(double t, Side) const override {
    const double w = dir_ * 2.0 * kPi / duration_;
    const double a = phase_ + w * t;
    const double c = std::cos(a), s = std::sin(a);
    return {{center_.x + radius_ * c, center_.y + radius_ * s},
            {-radius_ * w * s, radius_ * w * c}};
  }

 private:
  Vec2 center_;
  double radius_;
  double dir_;
  double phase_;
};

// Shared implementation for segments, polygons and stars. A ring adds the
// closing edge back to the first vertex; endpoints of every edge are returned
// exactly so rings close bit-for-bit.
class Polyline final : public Curve {
 public:
  Polyline(std::vector<Vec2> pts, bool ring, double duration)
      : Curve(duration), pts_(std::move(pts)), ring_(ring) {
    const std::size_t n = pts_.size();
    if (n < 2) throw std::invalid_argument("polyline: needs at least two vertices");
    for (const Vec2& p : pts_)
      if (!finite(p)) throw std::invalid_argument("polyline: vertices must be finite");
    const std::size_t edges = ring_ ? n : n - 1;
    std::vector<double> lengths(edges);
    for (std::size_t i = 0; i < edges; ++i) {
      lengths[i] = norm(vertex(i + 1) - vertex(i));
      length_ += lengths[i];
    }
    offsets_ = proportional_offsets(lengths, duration_);
    breaks_ = offsets_;
    dedupe_sorted(breaks_);
  }

  double length() const override { return length_; }

  void bounds(Vec2& lo, Vec2& hi) const override {
    lo = hi = pts_[0];
    for (const Vec2& p : pts_) {
      lo.x = std::min(lo.x, p.x);
      lo.y = std::min(lo.y, p.y);
      hi.x = std::max(hi.x, p.x);
      hi.y = std::max(hi.y, p.y);
    }
  }

 protected:
  CurveSample eval_impl(double t, Side side) const override {
    const std::size_t i = pick_span(offsets_, t, side);
    const Vec2 a = vertex(i), b = vertex(i + 1);
    const double span = offsets_[i + 1] - offsets_[i];
    if (span <= 0.0) return {a, {0.0, 0.0}};
    const double tau = (t - offsets_[i]) / span;
    const Vec2 vel = (b - a) / span;
    if (tau <= 0.0) return {a, vel};
    if (tau >= 1.0) return {b, vel};
    return {a + tau * (b - a), vel};
  }

 private:
  Vec2 vertex(std::size_t i) const { return pts_[i % pts_.size()]; }

  std::vector<Vec2> pts_;
  bool ring_;
  std::vector<double> offsets_;
  double length_ = 0.0;
};

class CompositeCurve final : public Curve {
 public:
  CompositeCurve(std::vector<Curve::Ptr> children, double duration)
      : Curve(duration), children_(std::move(children)) {
    if (children_.empty())
      throw std::invalid_argument("composite: needs at least one child");
    std::vector<double> lengths;
    lengths.reserve(children_.size());
    for (const auto& c : children_) {
      if (!c) throw std::invalid_argument("composite: null child");
      lengths.push_back(c->length());
      length_ += c->length();
    }
    offsets_ = proportional_offsets(lengths, duration_);

    // Children must meet continuously at junctions.
    Vec2 lo{}, hi{};
    bounds(lo, hi);
    const double tol = 1e-9 * (1.0 + norm(hi - lo));
    for (std::size_t i = 0; i + 1 < children_.size(); ++i) {
      const Vec2 end = children_[i]->position(children_[i]->duration());
      const Vec2 next = children_[i + 1]->position(0.0);
      if (norm(end - next) > tol)
        throw std::invalid_argument("composite: children do not meet at junction " +
                                    std::to_string(i));
    }

    breaks_ = offsets_;
    for (std::size_t i = 0; i < children_.size(); ++i) {
      const double span = offsets_[i + 1] - offsets_[i];
      const double ct = children_[i]->duration();
      if (span <= 0.0 || ct <= 0.0) continue;
      for (double b : children_[i]->breakpoints())
        breaks_.push_back(offsets_[i] + (b / ct) * span);
    }
    dedupe_sorted(breaks_);
  }

  double length() const override { return length_; }

  void bounds(Vec2& lo, Vec2& hi) const override {
    children_[0]->bounds(lo, hi);
    for (const auto& c : children_) {
      Vec2 l{}, h{};
      c->bounds(l, h);
      lo.x = std::min(lo.x, l.x);
      lo.y = std::min(lo.y, l.y);
      hi.x = std::max(hi.x, h.x);
      hi.y = std::max(hi.y, h.y);
    }
  }

 protected:
  CurveSample eval_impl(double t, Side side) const override {
    const std::size_t i = pick_span(offsets_, t, side);
    const auto& child = children_[i];
    const double span = offsets_[i + 1] - offsets_[i];
    const double ct = child->duration();
    if (span <= 0.0)
      return {child->position((side == Side::left) ? ct : 0.0), {0.0, 0.0}};
    double u = (t - offsets_[i]) / span * ct;
    u = std::clamp(u, 0.0, ct);
    CurveSample s = child->eval(u, side);
    s.vel = s.vel * (ct / span);
    return s;
  }

 private:
  std::vector<Curve::Ptr> children_;
  std::vector<double> offsets_;
  double length_ = 0.0;
};

class ReversedCurve final : public Curve {
 public:
  explicit ReversedCurve(Curve::Ptr child)
      : Curve(child ? child->duration() : 1.0), child_(std::move(child)) {
    if (!child_) throw std::invalid_argument("reversed: null child");
    for (double b : child_->breakpoints()) breaks_.push_back(duration_ - b);
    dedupe_sorted(breaks_);
  }

  double length() const override { return child_->length(); }
  void bounds(Vec2& lo, Vec2& hi) const override { child_->bounds(lo, hi); }

 protected:
  CurveSample eval_impl(double t, Side side) const override {
    CurveSample s = child_->eval(duration_ - t, flip(side));
    s.vel = -s.vel;
    return s;
  }

 private:
  Curve::Ptr child_;
};

}  // namespace

Curve::Curve(double duration) : duration_(duration) {
  if (!(duration > 0.0) || !std::isfinite(duration))
    throw std::invalid_argument("curve: duration must be positive and finite");
}

double Curve::diameter() const {
  Vec2 lo{}, hi{};
  bounds(lo, hi);
  return norm(hi - lo);
}

bool Curve::closed() const {
  return norm(position(duration_) - position(0.0)) <=
         1e-12 * (1.0 + diameter());
}

CurveSample Curve::eval(double t, Side side) const {
  const double tol =
      64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, duration_);
  if (!(t >= -tol && t <= duration_ + tol))
    throw std::domain_error("curve: parameter " + std::to_string(t) +
                            " outside [0, " + std::to_string(duration_) + "]");
  t = std::clamp(t, 0.0, duration_);
  auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
  if (it != breaks_.end() && *it - t <= tol) t = *it;
  else if (it != breaks_.begin() && t - *(it - 1) <= tol) t = *(it - 1);
  return eval_impl(t, side);
}

Curve::Ptr make_circle(Vec2 center, double radius, bool ccw, double phase,
                       double duration) {
  return std::make_shared<CircleCurve>(center, radius, ccw, phase, duration);
}

Curve::Ptr make_star(Vec2 center, int points, double outer_radius,
                     double inner_radius, double duration) {
  if (points < 2) throw std::invalid_argument("star: needs at least two points");
  if (!(outer_radius > 0.0) || !(inner_radius > 0.0))
    throw std::invalid_argument("star: radii must be positive");
  std::vector<Vec2> pts;
  pts.reserve(2 * static_cast<std::size_t>(points));
  for (int k = 0; k < 2 * points; ++k) {
    const double rho = (k % 2 == 0) ? outer_radius : inner_radius;
    const double a = kPi * k / points;
    pts.push_back({center.x + rho * std::cos(a), center.y + rho * std::sin(a)});
  }
  return std::make_shared<Polyline>(std::move(pts), true, duration);
}

Curve::Ptr make_polygon(std::vector<Vec2> vertices, double duration) {
  if (vertices.size() < 3)
    throw std::invalid_argument("polygon: needs at least three vertices");
  return std::make_shared<Polyline>(std::move(vertices), true, duration);
}

Curve::Ptr make_segment(Vec2 from, Vec2 to, double duration) {
  return std::make_shared<Polyline>(std::vector<Vec2>{from, to}, false,
                                    duration);
}

Curve::Ptr make_composite(std::vector<Curve::Ptr> children, double duration) {
  return std::make_shared<CompositeCurve>(std::move(children), duration);
}

Curve::Ptr make_reversed(Curve::Ptr child) {
  return std::make_shared<ReversedCurve>(std::move(child));
}

Curve::Ptr prytz_loop(const Curve::Ptr& region_boundary, Vec2 start) {
  if (!region_boundary) throw std::invalid_argument("prytz_loop: null boundary");
  const Vec2 b0 = region_boundary->position(0.0);
  const auto out = make_segment(start, b0);
  return make_composite({out, region_boundary, make_reversed(out)});
}

}  // namespace prytz
