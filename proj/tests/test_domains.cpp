#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "convexcore/domains.hpp"
#include "convexcore/rng.hpp"

using namespace convexcore;

namespace {

Vec v3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

ConvexDomain simplex3() {
  std::vector<Vec> walls;
  for (int i = 0; i < 3; ++i) {
    Vec w = Vec::Zero(3);
    w[i] = 1.0;
    walls.push_back(w);
  }
  return ConvexDomain::halfspace(walls, Vec::Ones(3));
}

// Hilbert metric on the open coordinate simplex in closed form:
// d(x, y) = 1/2 (max_i log(y_i/x_i) - min_i log(y_i/x_i)).
double simplex_hilbert(const Vec& x, const Vec& y) {
  double mx = -1e300, mn = 1e300;
  for (int i = 0; i < x.size(); ++i) {
    double r = std::log(y[i] / x[i]);
    mx = std::max(mx, r);
    mn = std::min(mn, r);
  }
  return 0.5 * (mx - mn);
}

}  // namespace

TEST_CASE("klein ball membership") {
  ConvexDomain disk = ConvexDomain::klein(2);
  CHECK(disk.locate(ProjPoint(v3(0, 0, 1))) == Location::Interior);
  CHECK(disk.locate(ProjPoint(v3(1, 0, 1))) == Location::Boundary);
  CHECK(disk.locate(ProjPoint(v3(1, 0, 0.5))) == Location::Exterior);
  CHECK(disk.validate_properly_convex());
}

TEST_CASE("simplex membership") {
  ConvexDomain s = simplex3();
  CHECK(s.locate(ProjPoint(Vec::Ones(3))) == Location::Interior);
  CHECK(s.locate(ProjPoint(v3(1, 1, 0))) == Location::Boundary);
  CHECK(s.locate(ProjPoint(v3(1, -1, 1))) == Location::Exterior);
  // Sign-agnostic: the all-negative lift is the same projective point.
  CHECK(s.locate(ProjPoint(v3(-1, -1, -1))) == Location::Interior);
  CHECK(s.validate_properly_convex());
}

TEST_CASE("hull domain membership and dimension mismatch") {
  std::vector<Vec> pts = {v3(1, 0.1, 0.1), v3(0.1, 1, 0.1), v3(0.1, 0.1, 1),
                          v3(1, 1, 1)};
  ConvexDomain h = ConvexDomain::hull(pts);
  CHECK(h.locate(ProjPoint(v3(0.4, 0.4, 0.4))) == Location::Interior);
  CHECK(h.locate(ProjPoint(v3(1, -1, 0))) == Location::Exterior);
  Vec bad(4);
  bad << 1, 0, 0, 0;
  CHECK_THROWS_AS(h.locate(ProjPoint(bad)), Error);
}

TEST_CASE("degenerate hull is rejected") {
  std::vector<Vec> pts = {v3(1, 0, 0), v3(0, 1, 0)};
  CHECK_THROWS_AS(ConvexDomain::hull(pts), Error);
}

TEST_CASE("boundary intersection on the klein disk") {
  ConvexDomain disk = ConvexDomain::klein(2);
  ProjPoint y(v3(0, 0, 1)), z(v3(0.5, 0, 1));
  LineSection sec = boundary_intersect(disk, y, z);
  CHECK(chordal_distance(sec.a, ProjPoint(v3(-1, 0, 1))) < 1e-10);
  CHECK(chordal_distance(sec.b, ProjPoint(v3(1, 0, 1))) < 1e-10);
  CHECK_THROWS_AS(boundary_intersect(disk, y, y), Error);
  CHECK_THROWS_AS(boundary_intersect(disk, y, ProjPoint(v3(2, 0, 1))), Error);
}

TEST_CASE("boundary intersection on the simplex") {
  ConvexDomain s = simplex3();
  ProjPoint y(v3(0.7, 0.2, 0.1)), z(v3(0.3, 0.4, 0.3));
  LineSection sec = boundary_intersect(s, y, z);
  CHECK(s.locate(sec.a) == Location::Boundary);
  CHECK(s.locate(sec.b) == Location::Boundary);
  ExtReal cr = cross_ratio(sec.a, sec.y, sec.z, sec.b);
  REQUIRE(!cr.infinite);
  CHECK(cr.value > 1.0);
}

TEST_CASE("hilbert distance on the klein interval is arctanh") {
  ConvexDomain interval = ConvexDomain::klein(1);
  Vec origin(2), pt(2);
  origin << 0, 1;
  for (double t : {0.1, 0.5, 1.0, 2.0, 3.0}) {
    pt << std::tanh(t), 1;
    double d = hilbert_distance(interval, ProjPoint(origin), ProjPoint(pt));
    CHECK(std::abs(d - t) < 1e-9);
  }
  CHECK(hilbert_distance(interval, ProjPoint(origin), ProjPoint(origin)) == 0.0);
}

TEST_CASE("hilbert distance on the simplex matches the log-ratio oracle") {
  ConvexDomain s = simplex3();
  ProjPoint y(v3(1, 1, 1)), z(v3(4, 1, 1));
  double d = hilbert_distance(s, y, z);
  CHECK(std::abs(d - simplex_hilbert(v3(1, 1, 1), v3(4, 1, 1))) < 1e-9);

  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Vec a(3), b(3);
    for (int i = 0; i < 3; ++i) {
      a[i] = rng.uniform(0.05, 1.0);
      b[i] = rng.uniform(0.05, 1.0);
    }
    double got = hilbert_distance(s, ProjPoint(a), ProjPoint(b));
    CHECK(std::abs(got - simplex_hilbert(a, b)) < 1e-8);
  }
}

TEST_CASE("hilbert metric axioms and geodesic segments") {
  ConvexDomain disk = ConvexDomain::klein(2);
  Rng rng(7);
  auto sample = [&]() {
    while (true) {
      Vec v = v3(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9), 1.0);
      if (v[0] * v[0] + v[1] * v[1] < 0.8) return ProjPoint(v);
    }
  };
  for (int trial = 0; trial < 200; ++trial) {
    ProjPoint a = sample(), b = sample(), c = sample();
    if (chordal_distance(a, b) < 1e-6) continue;
    double ab = hilbert_distance(disk, a, b);
    double ba = hilbert_distance(disk, b, a);
    CHECK(std::abs(ab - ba) < 1e-9);
    double ac = hilbert_distance(disk, a, c);
    double cb = hilbert_distance(disk, c, b);
    CHECK(ab <= ac + cb + 1e-9);
    // Points on the straight segment realize additivity.
    Vec mid = 0.5 * (a.rep() / a.rep()[2] + b.rep() / b.rep()[2]);
    ProjPoint w(mid);
    double aw = hilbert_distance(disk, a, w);
    double wb = hilbert_distance(disk, w, b);
    CHECK(std::abs(ab - (aw + wb)) < 1e-9);
  }
}

TEST_CASE("hilbert isometry under domain automorphisms") {
  double t = 0.8;
  Mat boost = Mat::Identity(3, 3);
  boost(0, 0) = std::cosh(t);
  boost(0, 2) = std::sinh(t);
  boost(2, 0) = std::sinh(t);
  boost(2, 2) = std::cosh(t);
  ProjMat g(boost);
  ConvexDomain disk = ConvexDomain::klein(2);
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Vec a = v3(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7), 1.0);
    Vec b = v3(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7), 1.0);
    if (a.head(2).norm() > 0.95 || b.head(2).norm() > 0.95) continue;
    if ((a - b).norm() < 1e-6) continue;
    ProjPoint pa(a), pb(b);
    double before = hilbert_distance(disk, pa, pb);
    double after = hilbert_distance(disk, g.apply(pa), g.apply(pb));
    CHECK(std::abs(before - after) < 1e-8);
  }
}

TEST_CASE("euclidean distance bounded by hilbert times half-diameter") {
  ConvexDomain disk = ConvexDomain::klein(2);
  // Euclidean diameter of the unit-disk chart is 2, so the factor is 1.
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Vec a = v3(rng.uniform(-0.95, 0.95), rng.uniform(-0.95, 0.95), 1.0);
    Vec b = v3(rng.uniform(-0.95, 0.95), rng.uniform(-0.95, 0.95), 1.0);
    if (a.head(2).norm() > 0.99 || b.head(2).norm() > 0.99) continue;
    if ((a - b).norm() < 1e-9) continue;
    double eu = (a.head(2) - b.head(2)).norm();
    double hi = hilbert_distance(disk, ProjPoint(a), ProjPoint(b));
    CHECK(eu <= hi + 1e-9);
  }
}

TEST_CASE("dual of the simplex is the dual simplex") {
  ConvexDomain s = simplex3();
  ConvexDomain d = dual_domain(s);
  REQUIRE(d.kind() == DomainKind::Hull);
  REQUIRE(d.vertices().size() == 3);
  for (const auto& v : d.vertices()) {
    bool axis = false;
    for (int i = 0; i < 3; ++i)
      axis = axis || chordal_distance(v, Vec(Vec::Unit(3, i))) < 1e-10;
    CHECK(axis);
  }
}

TEST_CASE("klein ball is self dual") {
  ConvexDomain disk = ConvexDomain::klein(2);
  ConvexDomain d = dual_domain(disk);
  CHECK(d.kind() == DomainKind::Klein);
  CHECK(d.klein_p() == 2);
}

TEST_CASE("bidual of random polytopes recovers the vertices") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 4 + static_cast<int>(rng.integer(3));
    std::vector<Vec> pts;
    for (int i = 0; i < k; ++i)
      pts.push_back(v3(rng.uniform(-1, 1), rng.uniform(-1, 1), 1.0));
    ConvexDomain hull = ConvexDomain::hull(pts, v3(0, 0, 1));
    ConvexDomain dual = dual_domain(hull, 256);
    ConvexDomain bidual = dual_domain(dual, 256);
    double h = 0.0;
    for (const auto& f : bidual.vertices()) {
      double best = 2.0;
      for (const auto& v : hull.vertices())
        best = std::min(best, chordal_distance(f, v));
      h = std::max(h, best);
    }
    CHECK(h < 1e-6);
  }
}

TEST_CASE("delta pseudo-distance: interior target") {
  ConvexDomain disk = ConvexDomain::klein(2);
  ProjPoint y(v3(0.1, 0.2, 1)), z(v3(-0.3, 0.4, 1));
  double d = hilbert_distance(disk, y, z);
  double delta = delta_pseudo(disk, y, z);
  CHECK(delta == doctest::Approx(std::exp(2.0 * d)).epsilon(1e-8));
}

TEST_CASE("delta pseudo-distance: exterior point target lies in [-1,0)") {
  ConvexDomain disk = ConvexDomain::klein(2);
  ProjPoint y(v3(0.1, 0.0, 1));
  ProjPoint z(v3(2.0, 0.3, 1));
  double d = delta_pseudo(disk, y, z);
  CHECK(d < 0.0);
  CHECK(d >= -1.0);
}

TEST_CASE("delta pseudo-distance: hyperplane at infinity of the disk") {
  ConvexDomain disk = ConvexDomain::klein(2);
  ProjPoint center(v3(0, 0, 1));
  ProjHyperplane inf(v3(0, 0, 1));
  double d = delta_pseudo(disk, center, inf);
  CHECK(d == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("delta rejects hyperplanes meeting the closure") {
  ConvexDomain disk = ConvexDomain::klein(2);
  ProjPoint center(v3(0, 0, 1));
  ProjHyperplane secant(v3(1, 0, -0.5));  // the chart line x = 0.5
  CHECK_THROWS_AS(delta_pseudo(disk, center, secant), Error);
}

TEST_CASE("center of mass: symmetric domains") {
  ConvexDomain disk = ConvexDomain::klein(2);
  ProjPoint com = center_of_mass(disk);
  CHECK(chordal_distance(com, ProjPoint(v3(0, 0, 1))) < 5e-3);

  ConvexDomain s = simplex3();
  ProjPoint scm = center_of_mass(s);
  CHECK(chordal_distance(scm, ProjPoint(Vec::Ones(3))) < 5e-3);
}

TEST_CASE("center of mass is bit-reproducible") {
  std::vector<Vec> pts = {v3(0, 0, 1), v3(1, 0.2, 1), v3(1.1, 1, 1),
                          v3(-0.2, 0.8, 1)};
  ConvexDomain quad = ConvexDomain::hull(pts, v3(0, 0, 1));
  Config cfg;
  cfg.seed = 42;
  ProjPoint a = center_of_mass(quad, cfg);
  ProjPoint b = center_of_mass(quad, cfg);
  CHECK((a.rep() - b.rep()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("delta bound at the center of mass of random triangles") {
  Rng rng(41);
  int done = 0;
  while (done < 20) {
    std::vector<Vec> pts;
    for (int i = 0; i < 3; ++i)
      pts.push_back(v3(rng.uniform(-1, 1), rng.uniform(-1, 1), 1.0));
    Eigen::Matrix2d span;
    span.col(0) = (pts[1] - pts[0]).head(2);
    span.col(1) = (pts[2] - pts[0]).head(2);
    if (std::abs(span.determinant()) < 0.1) continue;
    ConvexDomain tri = ConvexDomain::hull(pts, v3(0, 0, 1));
    ProjPoint com = center_of_mass(tri);
    ProjHyperplane inf(v3(0, 0, 1));
    double d = delta_pseudo(tri, com, inf);
    CHECK(d <= -0.5 + 1e-9);
    ++done;
  }
}

TEST_CASE("omega_max on the coordinate dual cloud") {
  std::vector<ProjHyperplane> cloud;
  for (int i = 0; i < 3; ++i) cloud.emplace_back(Vec(Vec::Unit(3, i)));
  OmegaMaxResult res = omega_max(cloud, ProjPoint(Vec::Ones(3)));
  CHECK(res.properly_convex);
  CHECK(res.domain.locate(ProjPoint(Vec::Ones(3))) == Location::Interior);
  CHECK(res.domain.locate(ProjPoint(v3(1, 1, -1))) == Location::Exterior);

  std::vector<ProjHyperplane> bad = {ProjHyperplane(v3(1, -1, 0))};
  CHECK_THROWS_AS(omega_max(bad, ProjPoint(Vec::Ones(3))), Error);
}

TEST_CASE("omega_max of a sampled conic dual approximates the disk") {
  std::vector<ProjHyperplane> cloud;
  const int m = 64;
  for (int k = 0; k < m; ++k) {
    double th = 2 * M_PI * k / m;
    // Supporting covectors of the unit disk: <(cos, sin, -1), (x,y,1)> = 0
    // on the tangent line at angle th; the disk side is negative.
    cloud.emplace_back(v3(std::cos(th), std::sin(th), -1.0));
  }
  OmegaMaxResult res = omega_max(cloud, ProjPoint(v3(0, 0, 1)));
  CHECK(res.properly_convex);
  const Chart& chart = res.domain.bounding_chart();
  Vec c0 = chart.to_chart(res.domain.interior_point().rep());
  Rng rng(5);
  for (int k = 0; k < 16; ++k) {
    Vec f = res.domain.frontier_point(c0, rng.unit_vec(2));
    Vec hom = f / f[2];
    CHECK(hom.head(2).norm() == doctest::Approx(1.0).epsilon(0.02));
  }
}
