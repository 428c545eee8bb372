#include "convexcore/gallery.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "convexcore/rng.hpp"

namespace convexcore {

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require(bool ok, const std::string& check, std::vector<SelfCheck>& log,
             double value) {
  log.push_back({check, value});
  if (!ok)
    throw Error(ErrorCode::NumericalFailure, "self-check failed: " + check);
}

ConvexDomain coordinate_simplex(int n, const Config& cfg) {
  std::vector<Vec> walls;
  for (int i = 0; i < n; ++i) {
    Vec w = Vec::Zero(n);
    w[i] = 1.0;
    walls.push_back(w);
  }
  return ConvexDomain::halfspace(walls, Vec::Ones(n), cfg);
}

void check_domain_preserved(const GroupSpec& spec, const ConvexDomain& dom,
                            double tol, const std::string& check,
                            std::vector<SelfCheck>& log, const Config& cfg) {
  Rng rng(cfg.seed);
  const Chart& chart = dom.bounding_chart();
  Vec c0 = chart.to_chart(dom.interior_point().rep());
  double worst = 0.0;
  for (int k = 0; k < 8 * dom.dim(); ++k) {
    Vec f = dom.frontier_point(c0, rng.unit_vec(dom.dim() - 1), cfg);
    for (const auto& g : spec.alphabet())
      worst = std::max(worst, std::abs(dom.margin(g.matrix.mat() * f)));
  }
  require(worst <= tol, check, log, worst);
}

}  // namespace

// ---------------------------------------------------------------------------
// diagonal torus

ExampleDescriptor diagonal_torus(int n, double t, const Config& cfg) {
  if (n < 2 || t <= 1.0)
    throw Error(ErrorCode::BadParameters, "diagonal_torus needs n >= 2 and t > 1");
  ExampleDescriptor ex;
  ex.name = "diagonal_torus";
  ex.params = {{"n", static_cast<double>(n)}, {"t", t}};
  ex.group.n = n;
  ex.group.include_inverses = true;
  for (int k = 0; k < n - 1; ++k) {
    Mat m = Mat::Identity(n, n);
    m(k, k) = t;
    ex.group.generators.push_back({std::string(1, static_cast<char>('a' + k)),
                                   ProjMat(m, cfg)});
  }
  ex.domain = coordinate_simplex(n, cfg);
  check_domain_preserved(ex.group, *ex.domain, 1e-10, "simplex preserved",
                         ex.checks, cfg);
  ex.expected_verdict = n >= 3 ? VerdictKind::NonHyperbolicCCConsistent
                               : VerdictKind::StronglyCCConsistent;
  return ex;
}

// ---------------------------------------------------------------------------
// affine Coxeter family

ExampleDescriptor coxeter_an(int n, double t, const Config& cfg) {
  if (n < 2 || t <= 1.0)
    throw Error(ErrorCode::BadParameters, "coxeter_an needs n >= 2 and t > 1");
  ExampleDescriptor ex;
  ex.name = "coxeter_an";
  ex.params = {{"n", static_cast<double>(n)}, {"t", t}};
  ex.group.n = n;
  ex.group.include_inverses = false;  // involutions
  for (int i = 0; i + 1 < n; ++i) {
    Mat m = Mat::Identity(n, n);
    m(i, i) = 0.0;
    m(i + 1, i + 1) = 0.0;
    m(i, i + 1) = 1.0;
    m(i + 1, i) = 1.0;
    ex.group.generators.push_back({"s" + std::to_string(i + 1), ProjMat(m, cfg)});
  }
  {
    // Scaled swap of e_1 and e_n; an involution in PGL, unlike the plain
    // scaling, which would break the Coxeter relations.
    Mat m = Mat::Identity(n, n);
    m(0, 0) = 0.0;
    m(n - 1, n - 1) = 0.0;
    m(n - 1, 0) = t;
    m(0, n - 1) = 1.0 / t;
    ex.group.generators.push_back({"s" + std::to_string(n), ProjMat(m, cfg)});
  }

  Mat id = canonical_mat(Mat::Identity(n, n), cfg);
  double worst = 0.0;
  for (const auto& g : ex.group.generators) {
    Mat sq = canonical_mat(g.matrix.mat() * g.matrix.mat(), cfg);
    worst = std::max(worst, (sq - id).cwiseAbs().maxCoeff());
  }
  require(worst <= 1e-10, "generators are involutions in PGL", ex.checks, worst);

  ex.domain = coordinate_simplex(n, cfg);
  // The orthant components are permuted; the positive one is preserved
  // since all generator entries are nonnegative.
  check_domain_preserved(ex.group, *ex.domain, 1e-10, "orthant family preserved",
                         ex.checks, cfg);
  ex.expected_verdict = n >= 3 ? VerdictKind::NonHyperbolicCCConsistent
                               : VerdictKind::StronglyCCConsistent;
  return ex;
}

// ---------------------------------------------------------------------------
// cyclic examples

ExampleDescriptor cyclic_example(char kind, double a, double b, double c_or_t,
                                 double theta, const Config& cfg) {
  ExampleDescriptor ex;
  ex.name = std::string("cyclic_") + kind;
  Mat m = Mat::Zero(3, 3);
  switch (kind) {
    case 'a': {
      if (!(a > b && b > c_or_t && c_or_t > 0))
        throw Error(ErrorCode::BadParameters, "kind a needs a > b > c > 0");
      m.diagonal() << a, b, c_or_t;
      ex.params = {{"a", a}, {"b", b}, {"c", c_or_t}};
      ex.expected_verdict = VerdictKind::StronglyCCConsistent;
      break;
    }
    case 'b': {
      if (!(a > b && b > 0))
        throw Error(ErrorCode::BadParameters, "kind b needs a > b > 0");
      m.diagonal() << a, b, b;
      ex.params = {{"a", a}, {"b", b}};
      ex.expected_verdict = VerdictKind::Inconclusive;
      break;
    }
    case 'c': {
      if (!(c_or_t > 0))
        throw Error(ErrorCode::BadParameters, "kind c needs t > 0");
      m << 2, 0, 0, 0, 1, c_or_t, 0, 0, 1;
      ex.params = {{"t", c_or_t}};
      ex.expected_verdict = VerdictKind::NoInvariantConvexSetFound;
      break;
    }
    case 'd': {
      if (!(a > b && b > 0) || !(theta > 0 && theta <= M_PI))
        throw Error(ErrorCode::BadParameters, "kind d needs a > b > 0, theta in (0, pi]");
      m(0, 0) = a;
      m(1, 1) = b * std::cos(theta);
      m(1, 2) = -b * std::sin(theta);
      m(2, 1) = b * std::sin(theta);
      m(2, 2) = b * std::cos(theta);
      ex.params = {{"a", a}, {"b", b}, {"theta", theta}};
      ex.expected_verdict = VerdictKind::NoInvariantConvexSetFound;
      break;
    }
    default:
      throw Error(ErrorCode::BadParameters, "cyclic kind must be one of a,b,c,d");
  }
  ex.group.n = 3;
  ex.group.include_inverses = true;
  ex.group.generators.push_back({"g", ProjMat(m, cfg)});

  if (kind == 'a' || kind == 'b') {
    ex.domain = coordinate_simplex(3, cfg);
    check_domain_preserved(ex.group, *ex.domain, 1e-10, "simplex preserved",
                           ex.checks, cfg);
  }
  if (kind == 'a') {
    ProjMat g = ex.group.generators[0].matrix;
    bool prox = is_proximal(g, cfg.tau_proximal);
    bool prox_dual = is_proximal_dual(g, cfg.tau_proximal);
    require(prox && prox_dual, "proximal on both sides", ex.checks,
            prox && prox_dual ? 1.0 : 0.0);
    Vec e1 = Vec::Unit(3, 0), e3 = Vec::Unit(3, 2);
    double d1 = chordal_distance(attracting_fixed_point(g, cfg).rep(), e1);
    double d3 =
        chordal_distance(attracting_fixed_point(g.inverse(cfg), cfg).rep(), e3);
    require(d1 < 1e-9 && d3 < 1e-9, "fixed points at [e1], [e3]", ex.checks,
            std::max(d1, d3));
  }
  return ex;
}

// ---------------------------------------------------------------------------
// tau_n and B_n

Mat tau_n(const Eigen::Matrix2d& g, int n) {
  if (n < 2) throw Error(ErrorCode::BadDimension, "tau_n needs n >= 2");
  if (std::abs(g.determinant()) < 1e-300)
    throw Error(ErrorCode::BadParameters, "tau_n of a singular matrix");
  const double a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  const int deg = n - 1;
  Mat out = Mat::Zero(n, n);
  // Column k: coefficients of (a x + c y)^{deg-k} (b x + d y)^k on the
  // basis x^{deg-l} y^l.
  for (int k = 0; k <= deg; ++k) {
    for (int i = 0; i <= deg - k; ++i) {
      for (int j = 0; j <= k; ++j) {
        int l = i + j;
        out(l, k) += binom(deg - k, i) * std::pow(a, deg - k - i) * std::pow(c, i) *
                     binom(k, j) * std::pow(b, k - j) * std::pow(d, j);
      }
    }
  }
  return out;
}

PQForm bn_form(int n, const Config& cfg) {
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorCode::BadDimension,
                "the invariant form is symmetric only for odd n >= 3");
  // Solve tau(g)^T B tau(g) = B over symmetric B for the two unipotent
  // generators of SL(2,R); the solution space is one-dimensional.
  const int nsym = n * (n + 1) / 2;
  auto sym_index = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
  };
  std::vector<Eigen::Matrix2d> gens(2);
  gens[0] << 1, 1, 0, 1;
  gens[1] << 1, 0, 1, 1;
  Mat rows(2 * n * n, nsym);
  rows.setZero();
  int r = 0;
  for (const auto& g2 : gens) {
    Mat T = tau_n(g2, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        // (T^T B T - B)_{ij} = sum_{k,l} T_{ki} B_{kl} T_{lj} - B_{ij}
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            rows(r, sym_index(k, l)) += T(k, i) * T(l, j);
        rows(r, sym_index(i, j)) -= 1.0;
        ++r;
      }
    }
  }
  Eigen::JacobiSVD<Mat> svd(rows, Eigen::ComputeThinV);
  const Vec& sv = svd.singularValues();
  double scale = sv[0];
  if (sv[nsym - 1] > 1e-8 * scale || sv[nsym - 2] < 1e-8 * scale)
    throw Error(ErrorCode::NumericalFailure,
                "invariant-form solution space is not one-dimensional");
  Vec bvec = svd.matrixV().col(nsym - 1);
  Mat B = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) B(i, j) = B(j, i) = bvec[sym_index(i, j)];
  // Scale: B(x^{n-1}, y^{n-1}) = -omega(e1,e2)^{n-1} = -1.
  double corner = B(0, n - 1);
  if (std::abs(corner) < 1e-12)
    throw Error(ErrorCode::NumericalFailure, "unexpected zero antidiagonal corner");
  B *= -1.0 / corner;
  return PQForm::from_gram(B, cfg);
}

// ---------------------------------------------------------------------------
// Schottky group in SO(2,1)

ExampleDescriptor schottky_so21(double s, double theta, const Config& cfg) {
  if (!(s > 1.0))
    throw Error(ErrorCode::BadParameters, "schottky_so21 needs s > 1");
  if (!(theta > 0 && theta < M_PI / 2))
    throw Error(ErrorCode::BadParameters, "schottky_so21 needs theta in (0, pi/2)");
  ExampleDescriptor ex;
  ex.name = "schottky_so21";
  ex.params = {{"s", s}, {"theta", theta}};

  Eigen::Matrix2d A, R;
  A << s, 0, 0, 1.0 / s;
  R << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  Eigen::Matrix2d B2 = R * A * R.transpose();

  Mat tA = tau_n(A, 3), tB = tau_n(B2, 3);
  {
    Mat expect = Mat::Zero(3, 3);
    expect.diagonal() << s * s, 1.0, 1.0 / (s * s);
    require((tA - expect).cwiseAbs().maxCoeff() <= 1e-9 * s * s,
            "tau_3(diag(s,1/s)) = diag(s^2,1,s^-2)", ex.checks,
            (tA - expect).cwiseAbs().maxCoeff());
  }
  PQForm B3 = bn_form(3, cfg);
  double inv_resid = std::max(
      (tA.transpose() * B3.gram() * tA - B3.gram()).cwiseAbs().maxCoeff(),
      (tB.transpose() * B3.gram() * tB - B3.gram()).cwiseAbs().maxCoeff());
  require(inv_resid <= 1e-9, "generators preserve B_3", ex.checks, inv_resid);

  // Transport B_3 to the standard diag(1,1,-1) coordinates.
  Eigen::SelfAdjointEigenSolver<Mat> es(B3.gram());
  Vec ev = es.eigenvalues();
  Mat Q = es.eigenvectors();
  // Order: positive eigenvalues first.
  std::vector<int> order;
  for (int i = 0; i < 3; ++i)
    if (ev[i] > 0) order.push_back(i);
  for (int i = 0; i < 3; ++i)
    if (ev[i] < 0) order.push_back(i);
  Mat T(3, 3);
  for (int k = 0; k < 3; ++k)
    T.col(k) = Q.col(order[k]) / std::sqrt(std::abs(ev[order[k]]));
  Mat D = Mat::Identity(3, 3);
  D(2, 2) = -1.0;
  require((T.transpose() * B3.gram() * T - D).cwiseAbs().maxCoeff() <= 1e-9,
          "congruence to diag(1,1,-1)", ex.checks,
          (T.transpose() * B3.gram() * T - D).cwiseAbs().maxCoeff());
  Mat Tinv = T.inverse();
  Mat hA = Tinv * tA * T, hB = Tinv * tB * T;
  double so_resid = std::max((hA.transpose() * D * hA - D).cwiseAbs().maxCoeff(),
                             (hB.transpose() * D * hB - D).cwiseAbs().maxCoeff());
  require(so_resid <= 1e-9, "conjugated generators preserve diag(1,1,-1)",
          ex.checks, so_resid);

  ex.group.n = 3;
  ex.group.include_inverses = true;
  ex.group.generators.push_back({"a", ProjMat(hA, cfg)});
  ex.group.generators.push_back({"b", ProjMat(hB, cfg)});
  ex.domain = ConvexDomain::klein(2, cfg);
  ex.form = PQForm::standard(2, 1);
  ex.expected_verdict = VerdictKind::StronglyCCConsistent;

  // Ping-pong certificate on the Klein disk via Dirichlet half-planes
  // D_g = { x : d(x, g m) < d(x, m) } around the disk center m.
  {
    const ConvexDomain& disk = *ex.domain;
    ProjPoint center = disk.interior_point();
    std::vector<Mat> letters = {hA, hB, hA.inverse(), hB.inverse()};
    std::vector<ProjPoint> images;
    for (const auto& L : letters) images.emplace_back(L * center.rep(), cfg);
    auto dist = [&](const ProjPoint& x, const ProjPoint& y) {
      return chordal_distance(x, y) < 1e-13 ? 0.0 : hilbert_distance(disk, x, y, cfg);
    };
    auto in_halfplane = [&](int g, const ProjPoint& x) {
      return dist(x, images[g]) < dist(x, center);
    };
    std::vector<ProjPoint> grid;
    for (int ir = 1; ir <= 14; ++ir) {
      double rr = ir / 14.0 * 0.995;
      int steps = 6 * ir;
      for (int k = 0; k < steps; ++k) {
        double th = 2 * M_PI * k / steps;
        Vec v(3);
        v << rr * std::cos(th), rr * std::sin(th), 1.0;
        grid.emplace_back(v, cfg);
      }
    }
    bool ok = true;
    auto inv_of = [](int g) { return g ^ 2; };  // 0<->2, 1<->3
    for (const auto& x : grid) {
      int hits = 0;
      for (int g = 0; g < 4; ++g) hits += in_halfplane(g, x) ? 1 : 0;
      if (hits > 1) ok = false;
    }
    for (int g = 0; g < 4 && ok; ++g) {
      for (const auto& x : grid) {
        if (in_halfplane(inv_of(g), x)) continue;
        ProjPoint y(letters[g] * x.rep(), cfg);
        if (!in_halfplane(g, y)) {
          ok = false;
          break;
        }
      }
    }
    ex.ping_pong_certified = ok;
    ex.checks.push_back({"ping-pong certificate", ok ? 1.0 : 0.0});
  }
  return ex;
}

// ---------------------------------------------------------------------------
// block inclusion, H^{p,q} embedding, bending

Mat sl_lift(const Mat& m) {
  double det = m.determinant();
  if (std::abs(det) < 1e-300)
    throw Error(ErrorCode::BadParameters, "singular matrix has no SL lift");
  return m / std::pow(std::abs(det), 1.0 / static_cast<double>(m.rows()));
}

GroupSpec block_include_lifted(const std::vector<LiftedGenerator>& lifted,
                               int nprime, const Config& cfg) {
  if (nprime < 1) throw Error(ErrorCode::BadParameters, "block_include needs n' >= 1");
  if (lifted.empty()) throw Error(ErrorCode::BadParameters, "no generators");
  const int n = static_cast<int>(lifted[0].lift.rows());
  GroupSpec out;
  out.n = n + nprime;
  out.include_inverses = true;
  for (const auto& gen : lifted) {
    Mat m = Mat::Identity(out.n, out.n);
    m.topLeftCorner(n, n) = gen.lift;
    // Spectral contract: the raw mu-vector of the embedded element is the
    // merge of the lift's mu-vector with n' zeros.
    SpectralData top = spectral_of(gen.lift);
    SpectralData emb = spectral_of(m);
    std::vector<double> merged(top.mu.data(), top.mu.data() + n);
    merged.insert(merged.end(), nprime, 0.0);
    std::sort(merged.rbegin(), merged.rend());
    for (int i = 0; i < out.n; ++i)
      if (std::abs(emb.mu[i] - merged[i]) > 1e-9)
        throw Error(ErrorCode::NumericalFailure,
                    "self-check failed: embedded singular spectrum merge");
    out.generators.push_back({gen.label, ProjMat(m, cfg)});
  }
  return out;
}

GroupSpec block_include(const GroupSpec& g, int nprime, const Config& cfg) {
  std::vector<LiftedGenerator> lifted;
  for (const auto& gen : g.generators)
    lifted.push_back({gen.label, sl_lift(gen.matrix.mat())});
  GroupSpec out = block_include_lifted(lifted, nprime, cfg);
  out.include_inverses = g.include_inverses;
  return out;
}

Mat hpq_embed_point(int m, int p, int q) {
  if (p < m || q < 1)
    throw Error(ErrorCode::BadParameters, "embedding needs p >= m and q >= 1");
  Mat E = Mat::Zero(p + q, m + 1);
  for (int i = 0; i < m; ++i) E(i, i) = 1.0;
  E(p + q - 1, m) = 1.0;
  return E;
}

Mat hpq_embed_element(const Mat& g, int m, int p, int q) {
  if (g.rows() != m + 1 || g.cols() != m + 1)
    throw Error(ErrorCode::DimensionMismatch, "element must act on R^{m,1}");
  Mat E = hpq_embed_point(m, p, q);
  Mat out = Mat::Identity(p + q, p + q);
  out += E * (g - Mat::Identity(m + 1, m + 1)) * E.transpose();
  return out;
}

Mat lift_word_product(const std::vector<LiftedGenerator>& lifted,
                      const std::vector<int>& word) {
  const int g = static_cast<int>(lifted.size());
  const int n = static_cast<int>(lifted[0].lift.rows());
  Mat acc = Mat::Identity(n, n);
  for (int a : word) {
    if (a < g)
      acc = acc * lifted[a].lift;
    else
      acc = acc * lifted[a - g].lift.inverse();
  }
  return acc;
}

Mat bend_cocycle_of_word(const std::vector<LiftedGenerator>& lifted,
                         const std::vector<Mat>& u, const std::vector<int>& word) {
  const int g = static_cast<int>(lifted.size());
  const int n = static_cast<int>(lifted[0].lift.rows());
  const int np = static_cast<int>(u[0].cols());
  // u(gamma_1 gamma_2) = u(gamma_1) + gamma_1 u(gamma_2), and
  // u(gamma^{-1}) = -gamma^{-1} u(gamma).
  Mat acc = Mat::Zero(n, np);
  Mat prefix = Mat::Identity(n, n);
  for (int a : word) {
    Mat letter_u, letter_m;
    if (a < g) {
      letter_u = u[a];
      letter_m = lifted[a].lift;
    } else {
      Mat inv = lifted[a - g].lift.inverse();
      letter_u = -inv * u[a - g];
      letter_m = inv;
    }
    acc += prefix * letter_u;
    prefix = prefix * letter_m;
  }
  return acc;
}

GroupSpec bend(const std::vector<LiftedGenerator>& lifted,
               const std::vector<Mat>& u, const Config& cfg) {
  if (lifted.empty() || lifted.size() != u.size())
    throw Error(ErrorCode::LiftMissing,
                "bend needs one lift and one cocycle value per generator");
  const int n = static_cast<int>(lifted[0].lift.rows());
  const int np = static_cast<int>(u[0].cols());
  GroupSpec out;
  out.n = n + np;
  out.include_inverses = true;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    if (u[i].rows() != n || u[i].cols() != np)
      throw Error(ErrorCode::DimensionMismatch, "cocycle block has wrong shape");
    Mat m = Mat::Identity(out.n, out.n);
    m.topLeftCorner(n, n) = lifted[i].lift;
    m.topRightCorner(n, np) = u[i];
    out.generators.push_back({lifted[i].label, ProjMat(m, cfg)});
  }

  // Cocycle identity self-check on random word pairs.
  Rng rng(cfg.seed);
  const int alphabet = 2 * static_cast<int>(lifted.size());
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> w1, w2;
    int l1 = 1 + static_cast<int>(rng.integer(4));
    int l2 = 1 + static_cast<int>(rng.integer(4));
    for (int i = 0; i < l1; ++i) w1.push_back(static_cast<int>(rng.integer(alphabet)));
    for (int i = 0; i < l2; ++i) w2.push_back(static_cast<int>(rng.integer(alphabet)));
    std::vector<int> w12 = w1;
    w12.insert(w12.end(), w2.begin(), w2.end());
    Mat lhs = bend_cocycle_of_word(lifted, u, w12);
    Mat rhs = bend_cocycle_of_word(lifted, u, w1) +
              lift_word_product(lifted, w1) * bend_cocycle_of_word(lifted, u, w2);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  if (worst > 1e-9)
    throw Error(ErrorCode::NumericalFailure,
                "bend cocycle identity failed on random word pairs");
  return out;
}

// ---------------------------------------------------------------------------
// registry

std::vector<std::string> gallery_names() {
  return {"diagonal_torus", "coxeter_an", "cyclic_a", "cyclic_b",
          "cyclic_c",       "cyclic_d",   "schottky_so21"};
}

ExampleDescriptor gallery_build(const std::string& name,
                                const std::map<std::string, double>& params,
                                const Config& cfg) {
  auto get = [&](const std::string& key, double dflt) {
    auto it = params.find(key);
    return it == params.end() ? dflt : it->second;
  };
  if (name == "diagonal_torus")
    return diagonal_torus(static_cast<int>(get("n", 3)), get("t", 2.0), cfg);
  if (name == "coxeter_an")
    return coxeter_an(static_cast<int>(get("n", 3)), get("t", 2.0), cfg);
  if (name == "cyclic_a")
    return cyclic_example('a', get("a", 4.0), get("b", 2.0), get("c", 1.0), 0.0, cfg);
  if (name == "cyclic_b")
    return cyclic_example('b', get("a", 4.0), get("b", 2.0), 0.0, 0.0, cfg);
  if (name == "cyclic_c")
    return cyclic_example('c', 0.0, 0.0, get("t", 1.0), 0.0, cfg);
  if (name == "cyclic_d")
    return cyclic_example('d', get("a", 4.0), get("b", 2.0), 0.0,
                          get("theta", M_PI / 2), cfg);
  if (name == "schottky_so21")
    return schottky_so21(get("s", 3.0), get("theta", M_PI / 4), cfg);
  throw Error(ErrorCode::BadParameters, "unknown gallery example: " + name);
}

}  // namespace convexcore
