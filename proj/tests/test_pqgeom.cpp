#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "convexcore/pqgeom.hpp"
#include "convexcore/rng.hpp"

using namespace convexcore;

namespace {

Vec v3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

// Random null vector of the standard (p,q) form with nonzero last entry.
Vec random_null(Rng& rng, int p, int q) {
  while (true) {
    Vec u = rng.gaussian_vec(p);
    Vec w = rng.gaussian_vec(q);
    if (u.norm() < 1e-3 || w.norm() < 1e-3) continue;
    u /= u.norm();
    w /= w.norm();
    Vec x(p + q);
    x.head(p) = u;
    x.tail(q) = w;
    if (std::abs(x[p + q - 1]) < 1e-2) continue;
    return x;
  }
}

PointCloud circle_cloud(int count) {
  PointCloud cloud(3, 1e-9);
  for (int k = 0; k < count; ++k) {
    double th = 2 * M_PI * k / count;
    CloudPoint p;
    p.point = ProjPoint(v3(std::cos(th), std::sin(th), 1.0));
    cloud.add(p);
  }
  return cloud;
}

}  // namespace

TEST_CASE("standard form classification") {
  PQForm F = PQForm::standard(2, 1);
  CHECK(classify(F, ProjPoint(v3(0, 0, 1))) == PQClass::Hpq);
  CHECK(classify(F, ProjPoint(v3(1, 0, 0))) == PQClass::Spq);
  CHECK(classify(F, ProjPoint(v3(1, 0, 1))) == PQClass::Boundary);
}

TEST_CASE("signature from a user Gram matrix") {
  Mat G(3, 3);
  G << 0, 0, -2, 0, 1, 0, -2, 0, 0;  // the discriminant form b^2 - 4ac
  PQForm F = PQForm::from_gram(G);
  CHECK(F.p() == 2);
  CHECK(F.q() == 1);
  CHECK_FALSE(F.is_standard());

  Mat bad = Mat::Zero(3, 3);
  bad(0, 0) = 1;  // degenerate
  CHECK_THROWS_AS(PQForm::from_gram(bad), Error);
  Mat asym(2, 2);
  asym << 0, 1, -1, 0;
  CHECK_THROWS_AS(PQForm::from_gram(asym), Error);
}

TEST_CASE("classification is invariant under the form's isometries") {
  PQForm F = PQForm::standard(2, 1);
  double t = 0.7;
  Mat boost = Mat::Identity(3, 3);
  boost(0, 0) = std::cosh(t);
  boost(0, 2) = std::sinh(t);
  boost(2, 0) = std::sinh(t);
  boost(2, 2) = std::cosh(t);
  REQUIRE((boost.transpose() * F.gram() * boost - F.gram()).cwiseAbs().maxCoeff() <
          1e-8);
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Vec x = rng.gaussian_vec(3);
    if (std::abs(F.eval(x / x.norm())) < 1e-6) continue;
    ProjPoint p(x);
    ProjPoint gp(boost * x);
    CHECK(classify(F, p) == classify(F, gp));
  }
}

TEST_CASE("transversality on null pairs") {
  PQForm F = PQForm::standard(2, 1);
  PointCloud cloud(3, 1e-9);
  CloudPoint a, b;
  a.point = ProjPoint(v3(1, 0, 1));
  b.point = ProjPoint(v3(-1, 0, 1));
  cloud.add(a);
  cloud.add(b);
  TransversalityResult res = is_transverse(F, cloud);
  CHECK(res.transverse);  // <y,z> = -2

  PointCloud badcloud(4, 1e-9);
  PQForm F22 = PQForm::standard(2, 2);
  Vec y(4), z(4);
  y << 1, 0, 1, 0;
  z << 0, 1, 0, 1;  // both null, <y,z> = 0
  CloudPoint cy, cz;
  cy.point = ProjPoint(y);
  cz.point = ProjPoint(z);
  badcloud.add(cy);
  badcloud.add(cz);
  TransversalityResult bad = is_transverse(F22, badcloud);
  CHECK_FALSE(bad.transverse);
  REQUIRE(bad.failures.size() == 1);

  PointCloud off(3, 1e-9);
  CloudPoint o;
  o.point = ProjPoint(v3(0, 0, 1));
  off.add(o);
  CHECK_THROWS_AS(is_transverse(F, off), Error);
}

TEST_CASE("negativity of a two-point cloud is Negative by convention") {
  PQForm F = PQForm::standard(2, 1);
  PointCloud cloud(3, 1e-9);
  CloudPoint a, b;
  a.point = ProjPoint(v3(1, 0, 1));
  b.point = ProjPoint(v3(-1, 0, 1));
  cloud.add(a);
  cloud.add(b);
  NegativityResult res = negativity(F, cloud);
  CHECK(res.verdict == NegativityVerdict::Negative);
}

TEST_CASE("negativity of the full conic cloud under both signs") {
  PQForm F = PQForm::standard(2, 1);
  PointCloud cloud = circle_cloud(24);
  NegativityResult res = negativity(F, cloud);
  CHECK(res.verdict == NegativityVerdict::Negative);
  CHECK(res.lift_test == NegativityVerdict::Negative);
  CHECK(res.triple_test == NegativityVerdict::Negative);

  PQForm Fneg = PQForm::from_gram(Mat(-F.gram()));
  NegativityResult flip = negativity(Fneg, cloud);
  CHECK(flip.verdict == NegativityVerdict::Positive);
}

TEST_CASE("negativity rejects non-transverse clouds") {
  PQForm F22 = PQForm::standard(2, 2);
  PointCloud badcloud(4, 1e-9);
  Vec y(4), z(4);
  y << 1, 0, 1, 0;
  z << 0, 1, 0, 1;
  CloudPoint cy, cz;
  cy.point = ProjPoint(y);
  cz.point = ProjPoint(z);
  badcloud.add(cy);
  badcloud.add(cz);
  CHECK_THROWS_AS(negativity(F22, badcloud), Error);
}

TEST_CASE("sphere flatten: t=0 identity, t=1 lands on the sphere") {
  PQForm F = PQForm::standard(3, 2);
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Vec x = random_null(rng, 3, 2);
    ProjPoint p(x);
    ProjPoint f0 = sphere_flatten(F, p, 0.0);
    CHECK((f0.rep() - p.rep()).cwiseAbs().maxCoeff() == 0.0);
    ProjPoint f1 = sphere_flatten(F, p, 1.0);
    const Vec& y = f1.rep();
    double lhs = y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
    CHECK(std::abs(lhs - y[4] * y[4]) < 1e-9);
    CHECK(std::abs(y[3]) < 1e-12);
  }
}

TEST_CASE("sphere flatten is a homotopy through the boundary") {
  PQForm F = PQForm::standard(3, 2);
  Rng rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    Vec x = random_null(rng, 3, 2);
    ProjPoint p(x);
    ProjPoint prev = sphere_flatten(F, p, 0.0);
    for (int k = 1; k <= 20; ++k) {
      ProjPoint ft = sphere_flatten(F, p, k / 20.0);
      CHECK(std::abs(F.eval(ft.rep())) < 1e-8);
      CHECK(chordal_distance(ft, prev) <= 10.0 * 0.05);
      prev = ft;
    }
  }
}

TEST_CASE("sphere flatten fixes points already on the sphere") {
  PQForm F = PQForm::standard(2, 2);
  Vec x(4);
  x << 0.6, 0.8, 0.0, 1.0;
  ProjPoint p(x);
  for (double t : {0.0, 0.3, 1.0}) {
    ProjPoint ft = sphere_flatten(F, p, t);
    CHECK(chordal_distance(ft, p) < 1e-12);
  }
}

TEST_CASE("sphere flatten input validation") {
  PQForm F = PQForm::standard(2, 1);
  CHECK_THROWS_AS(sphere_flatten(F, ProjPoint(v3(0, 0, 1)), 0.5), Error);
  PQForm F22 = PQForm::standard(2, 2);
  Vec x(4);
  x << 1, 0, 1, 0;  // null but at infinity of the flattening chart
  CHECK_THROWS_AS(sphere_flatten(F22, ProjPoint(x), 0.5), Error);
  Vec ok(4);
  ok << 1, 0, 0, 1;
  CHECK_THROWS_AS(sphere_flatten(F22, ProjPoint(ok), 1.5), Error);
}

TEST_CASE("pq duality and involution") {
  PQForm F = PQForm::standard(2, 1);
  ProjHyperplane h = pq_dual(F, ProjPoint(v3(0, 0, 1)));
  CHECK(chordal_distance(h.covector(), v3(0, 0, 1)) < 1e-12);

  ProjPoint nullp(v3(1, 0, 1));
  CHECK(std::abs(pq_dual(F, nullp).eval(nullp)) < 1e-12);

  Rng rng(11);
  Mat G(3, 3);
  G << 0, 0, -2, 0, 1, 0, -2, 0, 0;
  PQForm Fg = PQForm::from_gram(G);
  for (int trial = 0; trial < 100; ++trial) {
    ProjPoint x(rng.gaussian_vec(3));
    ProjPoint back = pq_dual_inv(Fg, pq_dual(Fg, x));
    CHECK(chordal_distance(back, x) < 1e-10);
  }
}
