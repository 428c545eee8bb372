#include "convexcore/projlin.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace convexcore {

namespace {

Vec canonical_vec(const Vec& v, double eps_sign) {
  double n = v.norm();
  if (n < 1e-300) throw Error(ErrorCode::ZeroVector, "cannot normalize zero vector");
  // Skip the rescale when already unit, so canonicalization is exactly
  // idempotent (a second pass returns the input bitwise).
  bool unit = std::abs(n - 1.0) <= 16.0 * std::numeric_limits<double>::epsilon();
  double sign = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > eps_sign * n) {
      sign = v[i] > 0 ? 1.0 : -1.0;
      break;
    }
  }
  if (unit && sign >= 0.0) return v;
  Vec u = v / (sign < 0 ? -n : n);
  return u;
}

}  // namespace

ProjPoint::ProjPoint(const Vec& v, const Config& cfg)
    : rep_(canonical_vec(v, cfg.eps_sign)) {}

ProjHyperplane::ProjHyperplane(const Vec& covector, const Config& cfg)
    : cov_(canonical_vec(covector, cfg.eps_sign)) {}

ProjPoint normalize_point(const Vec& v, const Config& cfg) {
  return ProjPoint(v, cfg);
}

ProjHyperplane normalize_hyperplane(const Vec& v, const Config& cfg) {
  return ProjHyperplane(v, cfg);
}

Mat canonical_mat(const Mat& m, const Config& cfg) {
  double n = m.norm();
  if (n < 1e-300) throw Error(ErrorCode::ZeroVector, "zero matrix");
  double target = std::sqrt(static_cast<double>(m.rows()));
  double sign = 0.0;
  for (Eigen::Index i = 0; i < m.rows() && sign == 0.0; ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (std::abs(m(i, j)) > cfg.eps_sign * n) {
        sign = m(i, j) > 0 ? 1.0 : -1.0;
        break;
      }
  // Exact idempotence: an already canonical matrix is returned bitwise.
  if (std::abs(n - target) <= 16.0 * std::numeric_limits<double>::epsilon() * target &&
      sign >= 0.0)
    return m;
  return m * ((sign < 0 ? -target : target) / n);
}

ProjMat::ProjMat(const Mat& m, const Config& cfg) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw Error(ErrorCode::BadDimension, "ProjMat requires a square matrix, n >= 2");
  Eigen::JacobiSVD<Mat> svd(m);
  double smin = svd.singularValues()(svd.singularValues().size() - 1);
  double smax = svd.singularValues()(0);
  if (smin <= 0 || smax / smin > cfg.kappa_max)
    throw Error(ErrorCode::NumericalFailure,
                "matrix is singular or too ill-conditioned for PGL");
  mat_ = canonical_mat(m, cfg);
}

ProjMat ProjMat::from_product(const Mat& m, const Config& cfg) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw Error(ErrorCode::BadDimension, "ProjMat requires a square matrix, n >= 2");
  ProjMat out;
  out.mat_ = canonical_mat(m, cfg);
  return out;
}

ProjMat ProjMat::inverse(const Config& cfg) const {
  return ProjMat(mat_.inverse(), cfg);
}

ProjMat ProjMat::operator*(const ProjMat& o) const {
  return ProjMat(mat_ * o.mat_);
}

ProjPoint ProjMat::apply(const ProjPoint& p) const {
  if (p.dim() != dim())
    throw Error(ErrorCode::DimensionMismatch, "point/matrix dimension mismatch");
  return ProjPoint(mat_ * p.rep());
}

ProjHyperplane ProjMat::apply(const ProjHyperplane& h) const {
  if (h.dim() != dim())
    throw Error(ErrorCode::DimensionMismatch, "hyperplane/matrix dimension mismatch");
  return ProjHyperplane(mat_.inverse().transpose() * h.covector());
}

double chordal_distance(const Vec& p, const Vec& q) {
  if (p.size() != q.size())
    throw Error(ErrorCode::DimensionMismatch, "chordal_distance dimension mismatch");
  // |sin| via the rejection p/|p| - cos * q/|q|, which stays accurate for
  // nearly parallel (or antiparallel) representatives where 1 - cos^2
  // cancels catastrophically.
  Vec u = p / p.norm();
  Vec v = q / q.norm();
  double c = u.dot(v);
  return std::min(1.0, (u - c * v).norm());
}

double chordal_distance(const ProjPoint& p, const ProjPoint& q) {
  return chordal_distance(p.rep(), q.rep());
}

ExtReal cross_ratio_1d(const Eigen::Vector2d& a, const Eigen::Vector2d& y,
                       const Eigen::Vector2d& z, const Eigen::Vector2d& b) {
  auto det = [](const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
    return u[0] * v[1] - u[1] * v[0];
  };
  // [a,y,z,b] = (det(b,y) det(z,a)) / (det(b,z) det(y,a)); with this
  // normalization [0,1,z,inf] = z.
  double num = det(b, y) * det(z, a);
  double den = det(b, z) * det(y, a);
  double scale = std::max({std::abs(num), std::abs(den), 1e-300});
  if (std::abs(den) <= 1e-15 * scale) return ExtReal::inf();
  return ExtReal::finite(num / den);
}

ExtReal cross_ratio(const ProjPoint& a, const ProjPoint& y, const ProjPoint& z,
                    const ProjPoint& b, const Config& cfg) {
  const int n = a.dim();
  if (y.dim() != n || z.dim() != n || b.dim() != n)
    throw Error(ErrorCode::DimensionMismatch, "cross_ratio dimension mismatch");
  if (chordal_distance(a, y) < cfg.eps_point || chordal_distance(z, b) < cfg.eps_point)
    throw Error(ErrorCode::DegenerateQuadruple, "cross_ratio requires a != y and z != b");
  Mat pts(4, n);
  pts.row(0) = a.rep();
  pts.row(1) = y.rep();
  pts.row(2) = z.rep();
  pts.row(3) = b.rep();
  Eigen::JacobiSVD<Mat> svd(pts, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv.size() > 2 && sv[2] > cfg.eps_collinear * sv[0])
    throw Error(ErrorCode::NotCollinear, "cross_ratio points are not collinear");
  Mat basis = svd.matrixV().leftCols(2);  // n x 2
  auto coord = [&](const ProjPoint& p) -> Eigen::Vector2d {
    return basis.transpose() * p.rep();
  };
  return cross_ratio_1d(coord(a), coord(y), coord(z), coord(b));
}

SpectralData spectral_of(const Mat& m) {
  SpectralData out;
  Eigen::JacobiSVD<Mat> svd(m);
  out.mu = svd.singularValues().array().log().matrix();
  Eigen::EigenSolver<Mat> es(m, false);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::NumericalFailure, "eigenvalue computation failed");
  Vec moduli = es.eigenvalues().array().abs().matrix();
  std::sort(moduli.data(), moduli.data() + moduli.size(), std::greater<double>());
  out.lambda = moduli.array().log().matrix();
  return out;
}

SpectralData spectral(const ProjMat& g) { return spectral_of(g.mat()); }

bool is_proximal(const ProjMat& g, double tau) {
  SpectralData s = spectral(g);
  return s.lambda_gap(1, 2) > tau;
}

bool is_proximal_dual(const ProjMat& g, double tau) {
  SpectralData s = spectral(g);
  const int n = g.dim();
  return s.lambda_gap(n - 1, n) > tau;
}

namespace {

ProjPoint top_eigenvector(const Mat& m, const Config& cfg) {
  Eigen::EigenSolver<Mat> es(m, true);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::NumericalFailure, "eigenvalue computation failed");
  const auto& vals = es.eigenvalues();
  int best = 0;
  for (int i = 1; i < vals.size(); ++i)
    if (std::abs(vals[i]) > std::abs(vals[best])) best = i;
  // A positive top modulus gap forces the leading eigenvalue to be real.
  Eigen::VectorXcd v = es.eigenvectors().col(best);
  Vec re = v.real(), im = v.imag();
  Vec rep = re.norm() >= im.norm() ? re : im;
  ProjPoint p(rep, cfg);
  ProjPoint image(m * p.rep(), cfg);
  if (chordal_distance(p, image) > 1e-8)
    throw Error(ErrorCode::NumericalFailure, "fixed point verification failed");
  return p;
}

}  // namespace

ProjPoint attracting_fixed_point(const ProjMat& g, const Config& cfg) {
  if (!is_proximal(g, cfg.tau_proximal))
    throw Error(ErrorCode::NotProximal, "element is not proximal in P(V)");
  return top_eigenvector(g.mat(), cfg);
}

ProjHyperplane attracting_fixed_hyperplane(const ProjMat& g, const Config& cfg) {
  if (!is_proximal_dual(g, cfg.tau_proximal))
    throw Error(ErrorCode::NotProximal, "element is not proximal in P(V*)");
  // Attracting covector of the dual action = eigenvector of g^T for the
  // eigenvalue of smallest modulus; computed without inverting g, which
  // may be numerically extreme for long words.
  Eigen::EigenSolver<Mat> es(g.mat().transpose(), true);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::NumericalFailure, "eigenvalue computation failed");
  const auto& vals = es.eigenvalues();
  int best = 0;
  for (int i = 1; i < vals.size(); ++i)
    if (std::abs(vals[i]) < std::abs(vals[best])) best = i;
  Eigen::VectorXcd v = es.eigenvectors().col(best);
  Vec re = v.real(), im = v.imag();
  return ProjHyperplane(re.norm() >= im.norm() ? re : im, cfg);
}

}  // namespace convexcore
