#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "convexcore/groups.hpp"
#include "convexcore/rng.hpp"

using namespace convexcore;

namespace {

GroupSpec torus3(double t = 2.0) {
  GroupSpec g;
  g.n = 3;
  g.include_inverses = true;
  for (int k = 0; k < 2; ++k) {
    Mat m = Mat::Identity(3, 3);
    m(k, k) = t;
    g.generators.push_back({std::string(1, static_cast<char>('a' + k)), ProjMat(m)});
  }
  return g;
}

GroupSpec free_schottky() {
  // Symmetric squares of diag(3, 1/3) and its pi/4 rotation, conjugated to
  // the standard SO(2,1) coordinates; free by ping-pong on the Klein disk.
  auto sym_sq = [](const Eigen::Matrix2d& g) {
    Mat m(3, 3);
    const double a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
    m << a * a, a * b, b * b, 2 * a * c, a * d + b * c, 2 * b * d, c * c, c * d,
        d * d;
    return m;
  };
  // The symmetric square preserves the discriminant form b^2 - 4ac; the
  // substitution a = (z-x)/2, b = y, c = (z+x)/2 turns it into
  // x^2 + y^2 - z^2, so T-conjugation lands in standard SO(2,1).
  Mat T(3, 3);
  T << -0.5, 0, 0.5, 0, 1, 0, 0.5, 0, 0.5;
  Mat Tinv = T.inverse();
  Eigen::Matrix2d A, R;
  A << 3, 0, 0, 1.0 / 3.0;
  double th = M_PI / 4;
  R << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
  GroupSpec g;
  g.n = 3;
  g.include_inverses = true;
  g.generators.push_back({"a", ProjMat(Tinv * sym_sq(A) * T)});
  g.generators.push_back({"b", ProjMat(Tinv * sym_sq(R * A * R.transpose()) * T)});
  return g;
}

ConvexDomain simplex3() {
  std::vector<Vec> walls;
  for (int i = 0; i < 3; ++i) walls.push_back(Vec::Unit(3, i));
  return ConvexDomain::halfspace(walls, Vec::Ones(3));
}

}  // namespace

TEST_CASE("ball radius zero is the identity") {
  BallIndex ball = word_ball(torus3(), 0);
  CHECK(ball.ball_size() == 1);
  CHECK(ball.elements()[0].length() == 0);
}

TEST_CASE("Z^2 ball counts match the L1 lattice count") {
  GroupSpec g = torus3();
  for (int R : {1, 2, 5, 8}) {
    BallIndex ball = word_ball(g, R);
    CHECK(ball.ball_size() == static_cast<std::size_t>(2 * R * R + 2 * R + 1));
  }
}

TEST_CASE("free Schottky ball counts match reduced words") {
  GroupSpec g = free_schottky();
  for (int R : {1, 2, 4, 6}) {
    BallIndex ball = word_ball(g, R);
    std::size_t expect = 2;
    for (int i = 0; i < R; ++i) expect *= 3;  // 2*3^R - 1
    CHECK(ball.ball_size() == expect - 1);
  }
}

TEST_CASE("dedup is stable under halved quantization") {
  Config cfg;
  Config half = cfg;
  half.dedup_cell = cfg.dedup_cell / 2;
  for (int R : {4, 6}) {
    CHECK(word_ball(torus3(), R, cfg).ball_size() ==
          word_ball(torus3(), R, half).ball_size());
    CHECK(word_ball(free_schottky(), R, cfg).ball_size() ==
          word_ball(free_schottky(), R, half).ball_size());
  }
}

TEST_CASE("no collisions reported on the gallery groups at moderate radius") {
  CHECK(word_ball(torus3(), 8).collisions().empty());
  CHECK(word_ball(free_schottky(), 6).collisions().empty());
}

TEST_CASE("ball cap raises BallTooLarge") {
  Config cfg;
  cfg.ball_cap = 10;
  CHECK_THROWS_AS(word_ball(free_schottky(), 4, cfg), Error);
}

TEST_CASE("geodesic witness words and homomorphism property") {
  GroupSpec g = torus3();
  BallIndex ball = word_ball(g, 5);
  auto alpha = g.alphabet();
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& e1 = ball.elements()[rng.integer(ball.ball_size())];
    const auto& e2 = ball.elements()[rng.integer(ball.ball_size())];
    Mat prod = e1.matrix.mat() * e2.matrix.mat();
    Mat byword = Mat::Identity(3, 3);
    for (int a : e1.word) byword = byword * alpha[a].matrix.mat();
    for (int a : e2.word) byword = byword * alpha[a].matrix.mat();
    CHECK((canonical_mat(prod) - canonical_mat(byword)).cwiseAbs().maxCoeff() < 1e-8);
  }
  for (int r = 0; r <= 5; ++r) {
    auto [lo, hi] = ball.sphere_range(r);
    for (std::size_t i = lo; i < hi; ++i)
      CHECK(ball.elements()[i].length() == r);
  }
}

TEST_CASE("mu subadditivity across the ball") {
  GroupSpec g = free_schottky();
  BallIndex ball = word_ball(g, 4);
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& e1 = ball.elements()[rng.integer(ball.ball_size())];
    const auto& e2 = ball.elements()[rng.integer(ball.ball_size())];
    double m1 = spectral(e1.matrix).mu[0];
    double m2 = spectral(e2.matrix).mu[0];
    double m12 = spectral_of(canonical_mat(e1.matrix.mat() * e2.matrix.mat())).mu[0];
    CHECK(m12 <= m1 + m2 + 1e-8);
  }
}

TEST_CASE("orbit basics") {
  GroupSpec g = torus3();
  ConvexDomain dom = simplex3();
  BallIndex ball0 = word_ball(g, 0);
  std::vector<ProjPoint> seeds = {dom.interior_point()};
  PointCloud cloud0 = orbit(g, ball0, dom, seeds);
  CHECK(cloud0.size() == 1);

  BallIndex ball = word_ball(g, 6);
  PointCloud cloud = orbit(g, ball, dom, seeds);
  CHECK(cloud.size() == ball.ball_size());
  for (const auto& p : cloud.points())
    CHECK(dom.locate(p.point) == Location::Interior);

  Vec ext(3);
  ext << 1, -1, 1;
  CHECK_THROWS_AS(orbit(g, ball, dom, {ProjPoint(ext)}), Error);
}

TEST_CASE("orbit accumulation depends on the seed") {
  GroupSpec g = torus3();
  BallIndex ball = word_ball(g, 8);
  Vec s1(3), s2(3);
  s1 << 1, 1, 1;
  s2 << 0.2, 0.3, 0.5;
  PointCloud c1(3, 1e-9), c2(3, 1e-9);
  auto tail_points = [&](const Vec& seed, PointCloud& out) {
    ProjPoint s(seed);
    auto [lo, hi] = ball.sphere_range(8);
    for (std::size_t i = lo; i < hi; ++i) {
      CloudPoint p;
      p.point = ball.elements()[i].matrix.apply(s);
      out.add(p);
    }
  };
  tail_points(s1, c1);
  tail_points(s2, c2);
  double hausdorff = 0.0;
  for (const auto& p : c1.points())
    hausdorff = std::max(hausdorff, c2.nearest_distance(p.point));
  CHECK(hausdorff > 0.05);
}

TEST_CASE("invariance check rejects a non-invariant domain") {
  GroupSpec g = free_schottky();
  CHECK_THROWS_AS(check_invariance(g, simplex3()), Error);
  GroupSpec t = torus3();
  check_invariance(t, simplex3());
}

TEST_CASE("qi defect on the diagonal torus is zero") {
  // Closed form on the simplex: 2 d(z, gz) = (mu_1 - mu_3)(g) for diagonal
  // g and z the barycenter, so every defect term vanishes.
  GroupSpec g = torus3();
  ConvexDomain dom = simplex3();
  BallIndex ball = word_ball(g, 6);
  QiDefect qd = qi_defect(g, ball, dom, ProjPoint(Vec::Ones(3)));
  CHECK(std::abs(qd.kappa_hat) < 1e-6);
  CHECK(qd.violations == 0);
}

TEST_CASE("qi defect is monotone and bounded on the Schottky disk") {
  GroupSpec g = free_schottky();
  ConvexDomain disk = ConvexDomain::klein(2);
  ProjPoint z = disk.interior_point();
  BallIndex b4 = word_ball(g, 4);
  BallIndex b6 = word_ball(g, 6);
  QiDefect q4 = qi_defect(g, b4, disk, z);
  QiDefect q6 = qi_defect(g, b6, disk, z);
  CHECK(q6.kappa_hat >= q4.kappa_hat - 1e-12);
  CHECK(q6.kappa_hat < 10.0);
}

TEST_CASE("gap profile: identity-only group is NotAnosov") {
  GroupSpec g;
  g.n = 3;
  g.include_inverses = true;
  g.generators.push_back({"e", ProjMat(Mat::Identity(3, 3))});
  BallIndex ball = word_ball(g, 8);
  CHECK(ball.ball_size() == 1);
  GapProfile prof = gap_profile(ball, 1, 2);
  CHECK(prof.verdict == GapVerdict::NotAnosov);
}

TEST_CASE("gap profile: Z^2 torus is NotAnosov with zero sphere minima") {
  GroupSpec g = torus3();
  BallIndex ball = word_ball(g, 8);
  GapProfile prof = gap_profile(ball, 1, 2);
  CHECK(prof.verdict == GapVerdict::NotAnosov);
  for (const auto& st : prof.per_radius) {
    if (st.r == 0 || st.count == 0) continue;
    CHECK(st.min < 1e-12);  // b^{-r} and a^j b^j have equal top exponents
  }
}

TEST_CASE("gap profile: Schottky group is AnosovConsistent") {
  GroupSpec g = free_schottky();
  BallIndex ball = word_ball(g, 8);
  GapProfile prof = gap_profile(ball, 1, 2);
  CHECK(prof.verdict == GapVerdict::AnosovConsistent);
  CHECK(prof.slope > 0.5);
  CHECK(prof.r2 > 0.95);
}

TEST_CASE("parallel enumeration is deterministic") {
  GroupSpec g = free_schottky();
  Config cfg;
  BallIndex serial = word_ball(g, 5, cfg, 1);
  BallIndex parallel = word_ball(g, 5, cfg, 4);
  REQUIRE(serial.ball_size() == parallel.ball_size());
  for (std::size_t i = 0; i < serial.ball_size(); ++i) {
    CHECK(serial.elements()[i].word == parallel.elements()[i].word);
    CHECK((serial.elements()[i].matrix.mat() - parallel.elements()[i].matrix.mat())
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }
}
