#include "convexcore/pqgeom.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "convexcore/rng.hpp"

namespace convexcore {

PQForm PQForm::standard(int p, int q) {
  if (p < 1 || q < 1)
    throw Error(ErrorCode::BadParameters, "signature requires p, q >= 1");
  PQForm F;
  F.p_ = p;
  F.q_ = q;
  F.gram_ = Mat::Identity(p + q, p + q);
  for (int i = p; i < p + q; ++i) F.gram_(i, i) = -1.0;
  F.standard_ = true;
  return F;
}

PQForm PQForm::from_gram(const Mat& gram, const Config& cfg) {
  if (gram.rows() != gram.cols())
    throw Error(ErrorCode::BadParameters, "Gram matrix must be square");
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw Error(ErrorCode::BadParameters, "Gram matrix must be symmetric");
  Mat sym = 0.5 * (gram + gram.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> es(sym);
  const Vec& ev = es.eigenvalues();
  double scale = ev.cwiseAbs().maxCoeff();
  PQForm F;
  F.gram_ = sym;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i]) < 1e-10 * scale)
      throw Error(ErrorCode::BadParameters, "degenerate bilinear form");
    (ev[i] > 0 ? F.p_ : F.q_) += 1;
  }
  if (F.p_ < 1 || F.q_ < 1)
    throw Error(ErrorCode::BadParameters, "form must be indefinite for H^{p,q-1}");
  Mat D = Mat::Identity(F.dim(), F.dim());
  for (int i = F.p_; i < F.dim(); ++i) D(i, i) = -1.0;
  F.standard_ = (sym - D).cwiseAbs().maxCoeff() <= 1e-12;
  (void)cfg;
  return F;
}

PQClass classify(const PQForm& F, const ProjPoint& x, const Config& cfg) {
  if (x.dim() != F.dim())
    throw Error(ErrorCode::DimensionMismatch, "point/form dimension mismatch");
  double v = F.eval(x.rep());
  if (v < -cfg.form_band) return PQClass::Hpq;
  if (v > cfg.form_band) return PQClass::Spq;
  return PQClass::Boundary;
}

TransversalityResult is_transverse(const PQForm& F, const PointCloud& cloud,
                                   const Config& cfg) {
  for (const auto& p : cloud.points())
    if (std::abs(F.eval(p.point.rep())) > cfg.on_boundary_tol)
      throw Error(ErrorCode::NotOnBoundary, "cloud point off the null quadric");
  TransversalityResult out;
  const auto& pts = cloud.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (std::abs(F.eval(pts[i].point.rep(), pts[j].point.rep())) <= cfg.tau_transverse) {
        out.transverse = false;
        out.failures.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return out;
}

const char* negativity_name(NegativityVerdict v) {
  switch (v) {
    case NegativityVerdict::Negative: return "Negative";
    case NegativityVerdict::Positive: return "Positive";
    case NegativityVerdict::Neither: return "Neither";
    case NegativityVerdict::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

namespace {

NegativityVerdict lift_test(const PQForm& F, const std::vector<Vec>& pts,
                            const Config& cfg) {
  const std::size_t n = pts.size();
  if (n < 2) return NegativityVerdict::Negative;  // vacuous
  auto propagate = [&](double target_sign) {
    std::vector<double> s(n, 1.0);
    for (std::size_t i = 1; i < n; ++i) {
      double v = F.eval(pts[0], pts[i]);
      if (std::abs(v) <= cfg.tau_transverse) return false;
      s[i] = (target_sign * v > 0) ? 1.0 : -1.0;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (target_sign * s[i] * s[j] * F.eval(pts[i], pts[j]) <= 0) return false;
    return true;
  };
  bool neg = propagate(-1.0);
  bool pos = propagate(+1.0);
  if (neg) return NegativityVerdict::Negative;  // preferred when both vacuously hold
  if (pos) return NegativityVerdict::Positive;
  return NegativityVerdict::Neither;
}

NegativityVerdict triple_signature(const PQForm& F, const Vec& a, const Vec& b,
                                   const Vec& c) {
  Eigen::Matrix3d G;
  Vec pts[3] = {a, b, c};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) G(i, j) = F.eval(pts[i], pts[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(G);
  int pos = 0, neg = 0;
  double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  for (int i = 0; i < 3; ++i) {
    if (std::abs(es.eigenvalues()[i]) < 1e-10 * std::max(scale, 1e-300)) continue;
    (es.eigenvalues()[i] > 0 ? pos : neg) += 1;
  }
  if (pos == 2 && neg == 1) return NegativityVerdict::Negative;
  if (pos == 1 && neg == 2) return NegativityVerdict::Positive;
  return NegativityVerdict::Neither;
}

}  // namespace

NegativityResult negativity(const PQForm& F, const PointCloud& cloud,
                            const Config& cfg) {
  TransversalityResult tr = is_transverse(F, cloud, cfg);
  if (!tr.transverse)
    throw Error(ErrorCode::NotTransverse, "cloud is not transverse");

  std::vector<Vec> pts;
  pts.reserve(cloud.size());
  for (const auto& p : cloud.points()) pts.push_back(p.point.rep());

  NegativityResult out;
  out.lift_test = lift_test(F, pts, cfg);

  const std::size_t n = pts.size();
  if (n < 3) {
    out.triple_test = out.lift_test;  // vacuous, defer to the lift
  } else {
    NegativityVerdict common = NegativityVerdict::Inconclusive;
    bool mixed = false;
    auto account = [&](std::size_t i, std::size_t j, std::size_t k) {
      NegativityVerdict v = triple_signature(F, pts[i], pts[j], pts[k]);
      ++out.triples_checked;
      if (common == NegativityVerdict::Inconclusive)
        common = v;
      else if (common != v)
        mixed = true;
    };
    std::size_t total = n * (n - 1) * (n - 2) / 6;
    if (total <= static_cast<std::size_t>(cfg.triple_samples)) {
      for (std::size_t i = 0; i < n && !mixed; ++i)
        for (std::size_t j = i + 1; j < n && !mixed; ++j)
          for (std::size_t k = j + 1; k < n && !mixed; ++k) account(i, j, k);
    } else {
      Rng rng(cfg.seed);
      for (int s = 0; s < cfg.triple_samples && !mixed; ++s) {
        std::size_t i = rng.integer(n), j = rng.integer(n), k = rng.integer(n);
        if (i == j || j == k || i == k) continue;
        account(i, j, k);
      }
    }
    out.triple_test = mixed ? NegativityVerdict::Neither : common;
  }

  out.verdict = (out.lift_test == out.triple_test) ? out.lift_test
                                                   : NegativityVerdict::Inconclusive;
  return out;
}

ProjPoint sphere_flatten(const PQForm& F, const ProjPoint& x, double t,
                         const Config& cfg) {
  if (!F.is_standard())
    throw Error(ErrorCode::BadParameters, "sphere_flatten needs standard coordinates");
  if (x.dim() != F.dim())
    throw Error(ErrorCode::DimensionMismatch, "point/form dimension mismatch");
  if (t < 0.0 || t > 1.0)
    throw Error(ErrorCode::BadParameters, "flattening parameter must lie in [0,1]");
  if (classify(F, x, cfg) != PQClass::Boundary)
    throw Error(ErrorCode::NotOnBoundary, "sphere_flatten needs a null point");
  const int p = F.p(), q = F.q();
  const Vec& v = x.rep();
  double last = v[p + q - 1];
  if (std::abs(last) < 1e-12)
    throw Error(ErrorCode::OutsideChart, "point at infinity of the flattening chart");
  double mid2 = 0.0;
  for (int i = p; i < p + q - 1; ++i) mid2 += v[i] * v[i];
  double alpha = mid2 / (last * last);
  Vec y = v;
  for (int i = p; i < p + q - 1; ++i) y[i] *= std::sqrt(1.0 - t);
  y[p + q - 1] = std::sqrt(1.0 + t * alpha) * last;
  return ProjPoint(y, cfg);
}

ProjHyperplane pq_dual(const PQForm& F, const ProjPoint& x, const Config& cfg) {
  if (x.dim() != F.dim())
    throw Error(ErrorCode::DimensionMismatch, "point/form dimension mismatch");
  return ProjHyperplane(F.gram() * x.rep(), cfg);
}

ProjPoint pq_dual_inv(const PQForm& F, const ProjHyperplane& h, const Config& cfg) {
  if (h.dim() != F.dim())
    throw Error(ErrorCode::DimensionMismatch, "hyperplane/form dimension mismatch");
  return ProjPoint(F.gram().inverse() * h.covector(), cfg);
}

}  // namespace convexcore
