#pragma once

#include <Eigen/Dense>
#include <vector>

#include "convexcore/config.hpp"
#include "convexcore/errors.hpp"

namespace convexcore {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// A point of P(V), stored as a unit vector whose first coordinate above
/// the sign threshold is positive. Canonical reps make hashing and
/// equality deterministic.
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(const Vec& v, const Config& cfg = default_config());

  const Vec& rep() const { return rep_; }
  int dim() const { return static_cast<int>(rep_.size()); }

 private:
  Vec rep_;
};

/// A point of P(V*): a projective hyperplane of P(V). Same normalization.
class ProjHyperplane {
 public:
  ProjHyperplane() = default;
  explicit ProjHyperplane(const Vec& covector,
                          const Config& cfg = default_config());

  const Vec& covector() const { return cov_; }
  int dim() const { return static_cast<int>(cov_.size()); }
  double eval(const ProjPoint& p) const { return cov_.dot(p.rep()); }
  bool incident(const ProjPoint& p, double eps = 1e-9) const {
    return std::abs(eval(p)) <= eps;
  }

 private:
  Vec cov_;
};

/// An element of PGL(n,R): an n x n invertible matrix scaled to Frobenius
/// norm sqrt(n), sign fixed by the first entry above threshold in
/// row-major order.
class ProjMat {
 public:
  ProjMat() = default;
  explicit ProjMat(const Mat& m, const Config& cfg = default_config());

  /// Wraps an internally formed product without the invertibility gate:
  /// products of validated group elements are invertible by construction
  /// even when their floating condition number is astronomical.
  static ProjMat from_product(const Mat& m, const Config& cfg = default_config());

  const Mat& mat() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  ProjMat inverse(const Config& cfg = default_config()) const;
  ProjMat operator*(const ProjMat& o) const;
  ProjPoint apply(const ProjPoint& p) const;
  /// Dual action on hyperplanes: ell -> ell o g^{-1}.
  ProjHyperplane apply(const ProjHyperplane& h) const;

  bool approx_equal(const ProjMat& o, double eps) const {
    return (mat_ - o.mat_).cwiseAbs().maxCoeff() <= eps;
  }

 private:
  Mat mat_;
};

/// Cartan and Jordan projections of a group element. Only the gaps are
/// lift-independent; the vectors are those of the canonical lift.
struct SpectralData {
  Vec mu;      // log singular values, descending
  Vec lambda;  // log eigenvalue moduli, descending

  double mu_gap(int i, int j) const { return mu[i - 1] - mu[j - 1]; }
  double lambda_gap(int i, int j) const { return lambda[i - 1] - lambda[j - 1]; }
};

/// Value on the one-point-compactified real line.
struct ExtReal {
  double value = 0.0;
  bool infinite = false;

  static ExtReal inf() { return ExtReal{0.0, true}; }
  static ExtReal finite(double v) { return ExtReal{v, false}; }
};

ProjPoint normalize_point(const Vec& v, const Config& cfg = default_config());
ProjHyperplane normalize_hyperplane(const Vec& v,
                                    const Config& cfg = default_config());

/// Canonical representative of a nonzero matrix as an element of PGL.
Mat canonical_mat(const Mat& m, const Config& cfg = default_config());

/// |sin| of the angle between the two lines.
double chordal_distance(const ProjPoint& p, const ProjPoint& q);
double chordal_distance(const Vec& p, const Vec& q);

/// Cross-ratio [a,y,z,b] of four collinear points, normalized so that
/// [0,1,z,inf] = z.
ExtReal cross_ratio(const ProjPoint& a, const ProjPoint& y, const ProjPoint& z,
                    const ProjPoint& b, const Config& cfg = default_config());

/// Cross-ratio from homogeneous coordinates on a line. No collinearity
/// check; used internally once points are reduced to a 2-dim span.
ExtReal cross_ratio_1d(const Eigen::Vector2d& a, const Eigen::Vector2d& y,
                       const Eigen::Vector2d& z, const Eigen::Vector2d& b);

/// mu/lambda of an arbitrary invertible matrix (no canonicalization).
SpectralData spectral_of(const Mat& m);
SpectralData spectral(const ProjMat& g);

bool is_proximal(const ProjMat& g, double tau = 1e-8);
bool is_proximal_dual(const ProjMat& g, double tau = 1e-8);

ProjPoint attracting_fixed_point(const ProjMat& g,
                                 const Config& cfg = default_config());
ProjHyperplane attracting_fixed_hyperplane(const ProjMat& g,
                                           const Config& cfg = default_config());

}  // namespace convexcore
