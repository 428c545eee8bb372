#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "convexcore/gallery.hpp"
#include "convexcore/rng.hpp"

using namespace convexcore;

namespace {

Eigen::Matrix2d random_sl2(Rng& rng) {
  while (true) {
    Eigen::Matrix2d g;
    g << rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian();
    double det = g.determinant();
    if (std::abs(det) < 0.05) continue;
    return g / std::sqrt(std::abs(det));
  }
}

}  // namespace

TEST_CASE("diagonal torus generators and domain") {
  ExampleDescriptor ex = diagonal_torus(3, 2.0);
  REQUIRE(ex.group.generators.size() == 2);
  Mat a = ex.group.generators[0].matrix.mat();
  Mat expect(3, 3);
  expect.setZero();
  expect.diagonal() << 2, 1, 1;
  CHECK((a - canonical_mat(expect)).cwiseAbs().maxCoeff() < 1e-12);
  REQUIRE(ex.domain.has_value());
  CHECK(ex.domain->kind() == DomainKind::Halfspace);
  CHECK(ex.expected_verdict == VerdictKind::NonHyperbolicCCConsistent);

  ExampleDescriptor interval = diagonal_torus(2, 2.0);
  CHECK(interval.group.generators.size() == 1);
  CHECK(interval.expected_verdict == VerdictKind::StronglyCCConsistent);

  CHECK_THROWS_AS(diagonal_torus(3, 1.0), Error);
  CHECK_THROWS_AS(diagonal_torus(1, 2.0), Error);
}

TEST_CASE("coxeter generators act as expected") {
  ExampleDescriptor ex = coxeter_an(3, 2.0);
  REQUIRE(ex.group.generators.size() == 3);
  // s1 swaps e1 and e2.
  Vec e1 = Vec::Unit(3, 0);
  ProjPoint image = ex.group.generators[0].matrix.apply(ProjPoint(e1));
  CHECK(chordal_distance(image, ProjPoint(Vec::Unit(3, 1))) < 1e-12);
  // All generators are involutions in PGL (self-check at construction).
  for (const auto& c : ex.checks)
    if (c.name == "generators are involutions in PGL") CHECK(c.value <= 1e-10);
  CHECK_THROWS_AS(coxeter_an(3, 0.5), Error);
}

TEST_CASE("cyclic examples: parameters and wiring") {
  ExampleDescriptor a = cyclic_example('a', 4, 2, 1);
  CHECK(a.expected_verdict == VerdictKind::StronglyCCConsistent);
  CHECK_THROWS_AS(cyclic_example('a', 2, 4, 1), Error);

  ExampleDescriptor b = cyclic_example('b', 4, 2, 0);
  CHECK(b.expected_verdict == VerdictKind::Inconclusive);

  ExampleDescriptor c = cyclic_example('c', 0, 0, 1.0);
  // Eigenvalues 2, 1, 1: lambda gaps (log 2, 0).
  SpectralData s = spectral(c.group.generators[0].matrix);
  CHECK(s.lambda_gap(1, 2) == doctest::Approx(std::log(2.0)).epsilon(1e-9));
  CHECK(s.lambda_gap(2, 3) < 1e-9);

  ExampleDescriptor d = cyclic_example('d', 4, 2, 0, M_PI / 2);
  CHECK(d.expected_verdict == VerdictKind::NoInvariantConvexSetFound);
  CHECK(is_proximal(d.group.generators[0].matrix));
  CHECK_FALSE(is_proximal_dual(d.group.generators[0].matrix));
  CHECK_THROWS_AS(cyclic_example('d', 4, 2, 0, 4.0), Error);
  CHECK_THROWS_AS(cyclic_example('x', 4, 2, 1), Error);
}

TEST_CASE("tau_n: n=2 is the identity functor") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::Matrix2d g = random_sl2(rng);
    Mat t2 = tau_n(g, 2);
    CHECK((t2 - g).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("tau_3 of a diagonal matrix") {
  Eigen::Matrix2d a;
  a << 3, 0, 0, 1.0 / 3.0;
  Mat t = tau_n(a, 3);
  Mat expect = Mat::Zero(3, 3);
  expect.diagonal() << 9, 1, 1.0 / 9.0;
  CHECK((t - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("tau_n is multiplicative") {
  Rng rng(5);
  for (int n : {3, 4, 5, 7}) {
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::Matrix2d g = random_sl2(rng), h = random_sl2(rng);
      Mat lhs = tau_n(g * h, n);
      Mat rhs = tau_n(g, n) * tau_n(h, n);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9 * std::max(1.0, lhs.norm()));
    }
  }
}

TEST_CASE("bn_form signatures follow the parity rule") {
  // n = 2m+1: (m+1, m) for odd m, (m, m+1) for even m.
  struct Expect { int n, p, q; };
  for (auto [n, p, q] : {Expect{3, 2, 1}, Expect{5, 2, 3}, Expect{7, 4, 3},
                         Expect{9, 4, 5}}) {
    PQForm F = bn_form(n);
    CHECK(F.p() == p);
    CHECK(F.q() == q);
  }
  CHECK_THROWS_AS(bn_form(4), Error);
}

TEST_CASE("bn_form is invariant and antidiagonal with corner -1") {
  std::vector<Eigen::Matrix2d> gens(3);
  gens[0] << 1, 1, 0, 1;
  gens[1] << 1, 0, 1, 1;
  gens[2] << 0, -1, 1, 0;
  for (int n : {3, 5, 7}) {
    PQForm F = bn_form(n);
    CHECK(F.gram()(0, n - 1) == doctest::Approx(-1.0).epsilon(1e-12));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i + j != n - 1) CHECK(std::abs(F.gram()(i, j)) < 1e-9);
    for (const auto& g : gens) {
      Mat T = tau_n(g, n);
      CHECK((T.transpose() * F.gram() * T - F.gram()).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("schottky example: checks and certificate") {
  ExampleDescriptor ex = schottky_so21(3.0, M_PI / 4);
  CHECK(ex.ping_pong_certified);
  CHECK(ex.expected_verdict == VerdictKind::StronglyCCConsistent);
  REQUIRE(ex.domain.has_value());
  CHECK(ex.domain->kind() == DomainKind::Klein);
  // Generators preserve the standard form.
  Mat D = Mat::Identity(3, 3);
  D(2, 2) = -1;
  for (const auto& g : ex.group.generators) {
    Mat m = g.matrix.mat();
    Mat r = m.transpose() * D * m;
    // PGL representative: rescale so the (0,0)-block matches.
    double scale = r(2, 2) / D(2, 2);
    CHECK((r / scale - D).cwiseAbs().maxCoeff() < 1e-9);
  }
  CHECK_THROWS_AS(schottky_so21(1.0, M_PI / 4), Error);
  CHECK_THROWS_AS(schottky_so21(3.0, 2.0), Error);
}

TEST_CASE("block inclusion merges the singular spectrum with zeros") {
  ExampleDescriptor ex = diagonal_torus(3, 2.0);
  GroupSpec inc = block_include(ex.group, 1);  // runs the merge self-check
  CHECK(inc.n == 4);
  // The identity group embeds to the identity group.
  GroupSpec id;
  id.n = 2;
  id.include_inverses = true;
  id.generators.push_back({"e", ProjMat(Mat::Identity(2, 2))});
  GroupSpec idinc = block_include(id, 2);
  CHECK((idinc.generators[0].matrix.mat() -
         canonical_mat(Mat::Identity(4, 4)))
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  // With the natural power-of-t lifts, top gaps are preserved for elements
  // whose lift has nonnegative second exponent (merged singular values).
  std::vector<LiftedGenerator> lifts;
  for (int k = 0; k < 2; ++k) {
    Mat m = Mat::Identity(3, 3);
    m(k, k) = 2.0;
    lifts.push_back({std::string(1, static_cast<char>('a' + k)), m});
  }
  GroupSpec big = block_include_lifted(lifts, 1);
  BallIndex small_ball = word_ball(ex.group, 2);
  BallIndex big_ball = word_ball(big, 2);
  GapProfile po = gap_profile(small_ball, 1, 2);
  GapProfile pi = gap_profile(big_ball, 1, 2);
  CHECK(po.per_radius[2].max == doctest::Approx(pi.per_radius[2].max).epsilon(1e-9));
}

TEST_CASE("hpq embedding maps the conic onto the quadric") {
  Mat E = hpq_embed_point(2, 3, 2);
  PQForm F32 = PQForm::standard(3, 2);
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    double th = rng.uniform(0, 2 * M_PI);
    Vec x(3);
    x << std::cos(th), std::sin(th), 1.0;  // on the (2,1) conic
    Vec y = E * x;
    CHECK(std::abs(F32.eval(y)) < 1e-12);
  }
  // Element embedding fixes the complement and is a homomorphism.
  Eigen::Matrix2d a;
  a << 2, 0, 0, 0.5;
  Mat g = tau_n(a, 3);
  Mat ig = hpq_embed_element(g, 2, 3, 2);
  CHECK(((ig * E) - (E * g)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("bend: u = 0 is block inclusion") {
  ExampleDescriptor ex = diagonal_torus(3, 2.0);
  std::vector<LiftedGenerator> lifts;
  for (const auto& g : ex.group.generators) {
    Mat m = g.matrix.mat();
    lifts.push_back({g.label, sl_lift(m)});
  }
  std::vector<Mat> u(lifts.size(), Mat::Zero(3, 1));
  GroupSpec bent = bend(lifts, u);
  GroupSpec inc = block_include(ex.group, 1);
  REQUIRE(bent.generators.size() == inc.generators.size());
  for (std::size_t i = 0; i < bent.generators.size(); ++i)
    CHECK((bent.generators[i].matrix.mat() - inc.generators[i].matrix.mat())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
}

TEST_CASE("bend: coboundary gives a conjugate of the inclusion") {
  Rng rng(13);
  ExampleDescriptor ex = diagonal_torus(3, 2.0);
  std::vector<LiftedGenerator> lifts;
  for (const auto& g : ex.group.generators) {
    Mat m = g.matrix.mat();
    lifts.push_back({g.label, sl_lift(m)});
  }
  Mat phi = rng.gaussian_vec(3);
  std::vector<Mat> u;
  for (const auto& l : lifts) u.push_back(phi - l.lift * phi);
  GroupSpec bent = bend(lifts, u);
  // Conjugation by [[I, phi],[0,1]] maps block_include to the bent group.
  Mat C = Mat::Identity(4, 4);
  C.topRightCorner(3, 1) = phi;
  Mat Cinv = C.inverse();
  GroupSpec inc = block_include(ex.group, 1);
  for (std::size_t i = 0; i < bent.generators.size(); ++i) {
    Mat expect = canonical_mat(C * inc.generators[i].matrix.mat() * Cinv);
    CHECK((bent.generators[i].matrix.mat() - expect).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("bend: cocycle identity on random words") {
  Rng rng(17);
  ExampleDescriptor ex = diagonal_torus(3, 2.0);
  std::vector<LiftedGenerator> lifts;
  for (const auto& g : ex.group.generators) {
    Mat m = g.matrix.mat();
    lifts.push_back({g.label, sl_lift(m)});
  }
  std::vector<Mat> u;
  for (std::size_t i = 0; i < lifts.size(); ++i) u.push_back(0.01 * rng.gaussian_vec(3));
  GroupSpec bent = bend(lifts, u);  // the constructor runs the 100-pair check
  CHECK(bent.n == 4);
  // Spot check: the (1,2) block of a product matches the cocycle formula.
  std::vector<int> w1 = {0, 1, 2}, w2 = {3, 0};
  Mat lhs_block = bend_cocycle_of_word(lifts, u, {0, 1, 2, 3, 0});
  Mat rhs = bend_cocycle_of_word(lifts, u, w1) +
            lift_word_product(lifts, w1) * bend_cocycle_of_word(lifts, u, w2);
  CHECK((lhs_block - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("bend requires matching lifts and cocycle values") {
  std::vector<LiftedGenerator> lifts = {{"a", Mat::Identity(3, 3)}};
  std::vector<Mat> u;
  CHECK_THROWS_AS(bend(lifts, u), Error);
}

TEST_CASE("gallery registry round trip") {
  auto names = gallery_names();
  CHECK(names.size() == 7);
  for (const auto& name : names) {
    ExampleDescriptor ex = gallery_build(name, {});
    CHECK(ex.name == name);
  }
  CHECK_THROWS_AS(gallery_build("nope", {}), Error);
}
