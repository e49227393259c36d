#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "prytz/csv_io.hpp"
#include "prytz/development.hpp"
#include "prytz/planimeter.hpp"
#include "prytz/se2.hpp"

using namespace prytz;

namespace {

constexpr double kPi = std::numbers::pi;

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Mat3 commutator(const Mat3& a, const Mat3& b) {
  const Mat3 ab = matmul(a, b), ba = matmul(b, a);
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = ab[i][j] - ba[i][j];
  return r;
}

double mat_dist(const Mat3& a, const Mat3& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

}  // namespace

TEST_SUITE_BEGIN("development");

TEST_CASE("se2 bracket table holds in the matrix representation") {
  const SE2Vector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  CHECK(mat_dist(commutator(e3.matrix(), e1.matrix()), e2.matrix()) <= 1e-15);
  const SE2Vector minus_e1{-1, 0, 0};
  CHECK(mat_dist(commutator(e3.matrix(), e2.matrix()), minus_e1.matrix()) <= 1e-15);
  const SE2Vector zero{0, 0, 0};
  CHECK(mat_dist(commutator(e1.matrix(), e2.matrix()), zero.matrix()) <= 1e-15);

  // coefficient bracket agrees with the matrix commutator
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 30; ++i) {
    const SE2Vector a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)};
    CHECK(mat_dist(se2_bracket(a, b).matrix(),
                   commutator(a.matrix(), b.matrix())) <= 1e-13);
  }
}

TEST_CASE("se2 group composition and inverse") {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 40; ++i) {
    const SE2Element g{u(rng), {u(rng), u(rng)}};
    const SE2Element h{u(rng), {u(rng), u(rng)}};
    const SE2Element k{u(rng), {u(rng), u(rng)}};
    const SE2Element gi = g.compose(g.inverse());
    CHECK(std::abs(gi.angle) <= 1e-12);
    CHECK(norm(gi.t) <= 1e-12);
    // associativity through the action on a point
    const Vec2 p{u(rng), u(rng)};
    const Vec2 lhs = g.compose(h).compose(k).apply(p);
    const Vec2 rhs = g.apply(h.apply(k.apply(p)));
    CHECK(norm(lhs - rhs) <= 1e-11);
  }
}

TEST_CASE("pseudoconnection coefficients") {
  const Config at{0.0, 0.0, 0.8, 2.5};
  // horizontal vectors (lift directions) annihilate the rotational coefficient
  for (double vx : {1.0, -0.4}) {
    for (double vy : {0.3, 2.0}) {
      const double vth = (std::sin(at.theta) * vx - std::cos(at.theta) * vy) / at.l;
      CHECK(std::abs(pseudoconnection(at, vx, vy, vth).c3) <= 1e-13);
    }
  }
  const SE2Vector vertical = pseudoconnection(at, 0, 0, 1);
  CHECK(vertical.c3 == doctest::Approx(at.l).epsilon(1e-15));

  // linearity
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 30; ++i) {
    const double ax = u(rng), ay = u(rng), at_ = u(rng);
    const double bx = u(rng), by = u(rng), bt = u(rng);
    const double s = u(rng);
    const SE2Vector lhs = pseudoconnection(at, ax + s * bx, ay + s * by, at_ + s * bt);
    const SE2Vector rhs = pseudoconnection(at, ax, ay, at_) +
                          s * pseudoconnection(at, bx, by, bt);
    CHECK(std::abs(lhs.c1 - rhs.c1) <= 1e-13);
    CHECK(std::abs(lhs.c2 - rhs.c2) <= 1e-13);
    CHECK(std::abs(lhs.c3 - rhs.c3) <= 1e-13);
  }
}

TEST_CASE("chisel velocity is the rod projector") {
  const Vec2 v{0.7, -0.3};
  const Vec2 at_zero = chisel_velocity(0.0, v);
  CHECK(at_zero.x == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(std::abs(at_zero.y) <= 1e-16);

  std::mt19937 rng(12);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 40; ++i) {
    const double th = u(rng);
    const Vec2 w{u(rng), u(rng)};
    const Vec2 once = chisel_velocity(th, w);
    const Vec2 twice = chisel_velocity(th, once);
    CHECK(norm(twice - once) <= 1e-15);
    // projects onto the rod direction
    const Vec2 rod{std::cos(th), std::sin(th)};
    CHECK(std::abs(cross(once, rod)) <= 1e-15);
  }

  // finite differences of the lifted chisel path converge to the formula
  const auto circle = make_circle({0, 0}, 1.0);
  auto fd_error = [&](std::size_t steps) {
    const auto path = lift(circle, 0.2, 2.0, steps);
    const double h = path.step_size();
    double emax = 0.0;
    for (std::size_t i = 1; i + 1 < path.size(); i += 11) {
      const Vec2 fd = (path.chisel_at(i + 1) - path.chisel_at(i - 1)) / (2.0 * h);
      const Vec2 an = chisel_velocity(path[i].theta, path[i].vel);
      emax = std::max(emax, norm(fd - an));
    }
    return emax;
  };
  const double e1 = fd_error(2000), e2 = fd_error(4000);
  CHECK(e1 <= 1e-4);
  CHECK(e2 <= e1 / 3.0);
}

TEST_CASE("development reproduces the analytic chisel path") {
  const auto star = make_star({0.3, -0.1}, 5, 1.0, 0.4);
  const double l = 5.0;
  const DevelopmentPath dev = develop(star, 0.4, l, 50000);
  const PlanimeterPath path = lift(star, 0.4, l, 50000);
  double dmax = 0.0, rot = 0.0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    dmax = std::max(dmax, norm(dev.chisel[i] - path.chisel_at(i)));
    rot = std::max(rot, std::abs(dev.frame_rotation[i] - (path[i].theta - 0.4)));
  }
  CHECK(dmax <= 1e-8);
  CHECK(rot <= 1e-10);
}

TEST_CASE("stationary tracer leaves the chisel in place") {
  const auto point = make_segment({1, 1}, {1, 1});
  const DevelopmentPath dev = develop(point, 0.7, 2.0, 64);
  for (const Vec2& q : dev.chisel) {
    CHECK(q.x == dev.chisel.front().x);
    CHECK(q.y == dev.chisel.front().y);
  }
}

TEST_CASE("straight-line development is a tractrix") {
  const double l = 2.0;
  const auto line = make_segment({0, 0}, {6.0 * l, 0});
  const DevelopmentPath dev = develop(line, kPi / 2.0, l, 50000);
  CHECK(dev.chisel.front().y == doctest::Approx(l).epsilon(1e-15));
  for (std::size_t i = 1; i < dev.chisel.size(); ++i)
    CHECK(dev.chisel[i].y < dev.chisel[i - 1].y + 1e-15);
  CHECK(dev.chisel.back().y > 0.0);
  CHECK(dev.chisel.back().y <= 0.01 * l);
  // rigidity against the tracer
  const auto path = lift(line, kPi / 2.0, l, 50000);
  for (std::size_t i = 0; i < path.size(); i += 1000)
    CHECK(std::abs(norm(dev.chisel[i] - path[i].pos) - l) <= 1e-6);
}

TEST_CASE("one-link chain reproduces the lift bit for bit") {
  const auto loop = prytz_loop(make_circle({0, 0}, 1.0), {0, 0});
  const std::size_t steps = 20000;
  const PlanimeterPath path = lift(loop, 0.0, 5.0, steps);
  const ChainPath chain = chain_lift(loop, {{5.0}, {0.0}}, steps);
  REQUIRE(chain.size() == path.size());
  for (std::size_t k = 0; k < path.size(); ++k) {
    CHECK(chain.angle_at(1, k) == path[k].theta);
    CHECK(chain.joint_at(0, k).x == path[k].pos.x);
    CHECK(chain.joint_at(0, k).y == path[k].pos.y);
    CHECK(chain.joint_at(1, k).x == path.chisel_at(k).x);
    CHECK(chain.joint_at(1, k).y == path.chisel_at(k).y);
  }

  // identical bytes in the shared CSV columns
  std::ostringstream a, b;
  write_planimeter_csv(a, path);
  write_chain_csv(b, chain);
  std::istringstream sa(a.str()), sb(b.str());
  std::string la, lb;
  std::getline(sa, la);
  std::getline(sb, lb);
  CHECK(la == "t,px,py,qx,qy,theta");
  CHECK(lb == "t,u0x,u0y,theta1,u1x,u1y");
  while (std::getline(sa, la) && std::getline(sb, lb)) {
    // reorder chain columns (t,u0,theta,u1) into the planimeter layout
    std::array<std::string, 6> fa, fb;
    std::stringstream pa(la), pb(lb);
    for (auto& f : fa) std::getline(pa, f, ',');
    for (auto& f : fb) std::getline(pb, f, ',');
    CHECK(fa[0] == fb[0]);  // t
    CHECK(fa[1] == fb[1]);  // px = u0x
    CHECK(fa[2] == fb[2]);  // py = u0y
    CHECK(fa[3] == fb[4]);  // qx = u1x
    CHECK(fa[4] == fb[5]);  // qy = u1y
    CHECK(fa[5] == fb[3]);  // theta = theta1
  }
}

TEST_CASE("chain rigidity and cascaded tractrices") {
  const double l = 1.0;
  const auto line = make_segment({0, 0}, {8.0, 0});
  const ChainPath chain = chain_lift(line, {{l, l, l}, {kPi / 2, kPi / 2, kPi / 2}}, 40000);
  for (std::size_t k = 0; k < chain.size(); k += 500) {
    for (std::size_t i = 1; i <= 3; ++i) {
      const double len = norm(chain.joint_at(i, k) - chain.joint_at(i - 1, k));
      CHECK(std::abs(len - l) <= 1e-13);
    }
  }
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t k = 1; k < chain.size(); k += 37) {
      CHECK(chain.joint_at(i, k).y <= chain.joint_at(i, k - 1).y + 1e-14);
    }
  }
}

TEST_CASE("chain translation equivariance") {
  const auto base = make_circle({0, 0}, 1.0);
  const auto moved = make_circle({3, -2}, 1.0);
  const TrailerChain chain{{1.0, 0.7}, {0.3, 1.1}};
  const ChainPath a = chain_lift(base, chain, 5000);
  const ChainPath b = chain_lift(moved, chain, 5000);
  for (std::size_t k = 0; k < a.size(); k += 100) {
    for (std::size_t i = 0; i <= 2; ++i) {
      const Vec2 d = b.joint_at(i, k) - a.joint_at(i, k);
      CHECK(d.x == doctest::Approx(3.0).epsilon(1e-9));
      CHECK(d.y == doctest::Approx(-2.0).epsilon(1e-9));
    }
  }
}

TEST_SUITE_END();
