#include "convexcore/domains.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "convexcore/rng.hpp"

namespace convexcore {

namespace {

constexpr double kChartEps = 1e-14;
constexpr double kRayCap = 1e12;

Vec unit(const Vec& v) { return v / v.norm(); }

}  // namespace

// ---------------------------------------------------------------------------
// Chart

Chart Chart::from_covector(const Vec& ell_in) {
  Chart c;
  c.ell = unit(ell_in);
  const int n = static_cast<int>(c.ell.size());
  // Orthonormal basis of {ell = 0} via full QR of [ell | I].
  Mat A(n, 1);
  A.col(0) = c.ell;
  Eigen::HouseholderQR<Mat> qr(A);
  Mat Q = qr.householderQ();
  c.basis = Q.rightCols(n - 1);
  return c;
}

Vec Chart::to_chart(const Vec& x) const {
  double d = ell.dot(x);
  if (std::abs(d) < kChartEps * x.norm())
    throw Error(ErrorCode::OutsideChart, "point at infinity of the chart");
  return (basis.transpose() * x) / d;
}

Vec Chart::from_chart(const Vec& c) const { return basis * c + ell; }

// ---------------------------------------------------------------------------
// Chart hulls

namespace {

// Monotone chain; returns CCW hull vertex indices.
std::vector<int> hull_2d(const std::vector<Vec>& pts) {
  const int m = static_cast<int>(pts.size());
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    if (pts[i][0] != pts[j][0]) return pts[i][0] < pts[j][0];
    return pts[i][1] < pts[j][1];
  });
  auto cross = [&](int o, int a, int b) {
    return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) -
           (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]);
  };
  std::vector<int> h(2 * m);
  int k = 0;
  for (int ii = 0; ii < m; ++ii) {
    int i = idx[ii];
    while (k >= 2 && cross(h[k - 2], h[k - 1], i) <= 0) --k;
    h[k++] = i;
  }
  for (int ii = m - 2, lo = k + 1; ii >= 0; --ii) {
    int i = idx[ii];
    while (k >= lo && cross(h[k - 2], h[k - 1], i) <= 0) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

std::vector<ChartFacet> facets_2d(const std::vector<Vec>& pts) {
  std::vector<int> h = hull_2d(pts);
  std::vector<ChartFacet> out;
  const int k = static_cast<int>(h.size());
  if (k < 3) throw Error(ErrorCode::NotProperlyConvex, "degenerate planar hull");
  for (int i = 0; i < k; ++i) {
    const Vec& p = pts[h[i]];
    const Vec& q = pts[h[(i + 1) % k]];
    Vec e = q - p;
    Vec nrm(2);
    nrm << e[1], -e[0];  // outward for CCW order
    double len = nrm.norm();
    if (len < 1e-300) continue;
    nrm /= len;
    out.push_back({nrm, nrm.dot(p)});
  }
  return out;
}

struct Tri {
  int a, b, c;
  Vec normal;  // outward unit
  double offset;
};

Tri make_tri(const std::vector<Vec>& pts, int a, int b, int c, const Vec& inside) {
  Vec u = pts[b] - pts[a], v = pts[c] - pts[a];
  Vec nrm(3);
  nrm << u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
      u[0] * v[1] - u[1] * v[0];
  double len = nrm.norm();
  if (len < 1e-300) throw Error(ErrorCode::NotProperlyConvex, "degenerate facet");
  nrm /= len;
  double off = nrm.dot(pts[a]);
  if (nrm.dot(inside) > off) {
    nrm = -nrm;
    off = -off;
    std::swap(b, c);
  }
  return Tri{a, b, c, nrm, off};
}

// Incremental 3d hull; adequate for desk-scale point counts.
std::vector<ChartFacet> facets_3d(const std::vector<Vec>& pts) {
  const int m = static_cast<int>(pts.size());
  if (m < 4) throw Error(ErrorCode::NotProperlyConvex, "too few points for a 3d hull");
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  const double eps = 1e-12 * std::max(scale, 1.0);

  // Initial tetrahedron.
  int i1 = 1;
  while (i1 < m && (pts[i1] - pts[0]).norm() < eps) ++i1;
  if (i1 >= m) throw Error(ErrorCode::NotProperlyConvex, "coincident points");
  int i2 = -1;
  {
    double best = eps;
    Vec d = unit(pts[i1] - pts[0]);
    for (int i = 0; i < m; ++i) {
      Vec r = pts[i] - pts[0];
      double a = (r - d * d.dot(r)).norm();
      if (a > best) {
        best = a;
        i2 = i;
      }
    }
  }
  if (i2 < 0) throw Error(ErrorCode::NotProperlyConvex, "collinear points");
  int i3 = -1;
  {
    Tri t = make_tri(pts, 0, i1, i2, pts[0]);
    double best = eps;
    for (int i = 0; i < m; ++i) {
      double a = std::abs(t.normal.dot(pts[i]) - t.offset);
      if (a > best) {
        best = a;
        i3 = i;
      }
    }
  }
  if (i3 < 0) throw Error(ErrorCode::NotProperlyConvex, "coplanar points");

  Vec inside = (pts[0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;
  std::vector<Tri> tris;
  tris.push_back(make_tri(pts, 0, i1, i2, inside));
  tris.push_back(make_tri(pts, 0, i1, i3, inside));
  tris.push_back(make_tri(pts, 0, i2, i3, inside));
  tris.push_back(make_tri(pts, i1, i2, i3, inside));

  for (int i = 0; i < m; ++i) {
    if (i == 0 || i == i1 || i == i2 || i == i3) continue;
    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(tris.size()); ++f)
      if (tris[f].normal.dot(pts[i]) > tris[f].offset + eps) visible.push_back(f);
    if (visible.empty()) continue;
    // Horizon edges: boundary of the visible region.
    std::vector<std::pair<int, int>> edges;
    auto add_edge = [&](int a, int b) {
      auto rev = std::make_pair(b, a);
      auto it = std::find(edges.begin(), edges.end(), rev);
      if (it != edges.end())
        edges.erase(it);
      else
        edges.emplace_back(a, b);
    };
    for (int f : visible) {
      add_edge(tris[f].a, tris[f].b);
      add_edge(tris[f].b, tris[f].c);
      add_edge(tris[f].c, tris[f].a);
    }
    std::sort(visible.rbegin(), visible.rend());
    for (int f : visible) tris.erase(tris.begin() + f);
    for (auto& e : edges) tris.push_back(make_tri(pts, e.first, e.second, i, inside));
  }

  std::vector<ChartFacet> out;
  out.reserve(tris.size());
  for (auto& t : tris) out.push_back({t.normal, t.offset});
  return out;
}

std::vector<ChartFacet> support_facets(const std::vector<Vec>& pts, int dim,
                                       std::uint64_t seed) {
  Rng rng(seed);
  const int count = 10 * (dim + 1) * (dim + 1);
  std::vector<ChartFacet> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    Vec u = rng.unit_vec(dim);
    double h = -1e300;
    for (const auto& p : pts) h = std::max(h, u.dot(p));
    out.push_back({u, h});
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ConvexDomain

void ConvexDomain::build_facets(const Config& cfg) {
  if (kind_ != DomainKind::Hull) return;
  std::vector<Vec> cpts;
  cpts.reserve(vertices_.size());
  for (const auto& v : vertices_) cpts.push_back(chart_.to_chart(v));
  const int d = n_ - 1;
  if (d == 1) {
    double lo = 1e300, hi = -1e300;
    for (const auto& c : cpts) {
      lo = std::min(lo, c[0]);
      hi = std::max(hi, c[0]);
    }
    if (hi - lo < 1e-14)
      throw Error(ErrorCode::NotProperlyConvex, "degenerate interval hull");
    Vec plus(1), minus(1);
    plus << 1.0;
    minus << -1.0;
    facets_ = {{plus, hi}, {minus, -lo}};
  } else if (d == 2) {
    facets_ = facets_2d(cpts);
  } else if (d == 3) {
    facets_ = facets_3d(cpts);
  } else {
    facets_ = support_facets(cpts, d, cfg.seed);
  }
}

const std::vector<ChartFacet>& ConvexDomain::chart_facets() const { return facets_; }

ConvexDomain ConvexDomain::halfspace(const std::vector<Vec>& walls,
                                     std::optional<Vec> interior_hint,
                                     const Config& cfg) {
  if (walls.empty()) throw Error(ErrorCode::BadParameters, "no walls given");
  ConvexDomain dom;
  dom.kind_ = DomainKind::Halfspace;
  dom.n_ = static_cast<int>(walls[0].size());
  if (dom.n_ < 2) throw Error(ErrorCode::BadDimension, "dimension must be >= 2");
  for (const auto& w : walls) {
    if (static_cast<int>(w.size()) != dom.n_)
      throw Error(ErrorCode::DimensionMismatch, "wall dimension mismatch");
    dom.walls_.push_back(unit(w));
  }

  auto min_margin = [&](const Vec& x) {
    double m = 1e300;
    for (const auto& w : dom.walls_) m = std::min(m, w.dot(x));
    return m;
  };

  Vec s = Vec::Zero(dom.n_);
  for (const auto& w : dom.walls_) s += w;

  Vec best;
  double best_m = -1e300;
  if (interior_hint) {
    Vec h = unit(*interior_hint);
    double m = std::max(min_margin(h), min_margin(Vec(-h)));
    if (m > cfg.interior_margin) {
      best = min_margin(h) >= min_margin(Vec(-h)) ? h : Vec(-h);
      best_m = m;
    }
  }
  if (best_m <= cfg.interior_margin) {
    // Subgradient ascent of min_i wall_i(x) over the unit sphere.
    std::vector<Vec> starts;
    if (s.norm() > 1e-12) starts.push_back(unit(s));
    Rng rng(cfg.seed);
    for (int k = 0; k < 8; ++k) starts.push_back(rng.unit_vec(dom.n_));
    for (auto x : starts) {
      for (int it = 0; it < 500; ++it) {
        int arg = 0;
        double m = 1e300;
        for (int i = 0; i < static_cast<int>(dom.walls_.size()); ++i) {
          double v = dom.walls_[i].dot(x);
          if (v < m) {
            m = v;
            arg = i;
          }
        }
        x = unit(x + (0.5 / std::sqrt(it + 1.0)) * dom.walls_[arg]);
      }
      double m = min_margin(x);
      if (m > best_m) {
        best_m = m;
        best = x;
      }
    }
  }
  if (best_m <= cfg.interior_margin)
    throw Error(ErrorCode::NotProperlyConvex, "no interior point found for halfspace domain");
  dom.interior_ = ProjPoint(best, cfg);
  dom.chart_ = Chart::from_covector(s.norm() > 1e-12 ? s : best);
  if (dom.chart_.ell.dot(best) < 0) dom.chart_.ell = -dom.chart_.ell;
  return dom;
}

ConvexDomain ConvexDomain::klein(int p, const Config& cfg) {
  if (p < 1) throw Error(ErrorCode::BadParameters, "klein ball needs p >= 1");
  ConvexDomain dom;
  dom.kind_ = DomainKind::Klein;
  dom.n_ = p + 1;
  dom.klein_p_ = p;
  Vec ell = Vec::Zero(p + 1);
  ell[p] = 1.0;
  dom.chart_ = Chart::from_covector(ell);
  dom.interior_ = ProjPoint(ell, cfg);
  return dom;
}

ConvexDomain ConvexDomain::hull(const std::vector<Vec>& points,
                                std::optional<Vec> chart_ell, const Config& cfg) {
  if (points.size() < 2) throw Error(ErrorCode::BadParameters, "hull needs >= 2 points");
  ConvexDomain dom;
  dom.kind_ = DomainKind::Hull;
  dom.n_ = static_cast<int>(points[0].size());
  if (dom.n_ < 2) throw Error(ErrorCode::BadDimension, "dimension must be >= 2");

  std::vector<Vec> pts;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dom.n_)
      throw Error(ErrorCode::DimensionMismatch, "hull point dimension mismatch");
    pts.push_back(unit(p));
  }

  Vec ell;
  if (chart_ell) {
    ell = unit(*chart_ell);
  } else {
    Mat M = Mat::Zero(dom.n_, dom.n_);
    for (const auto& p : pts) M += p * p.transpose();
    Eigen::SelfAdjointEigenSolver<Mat> es(M);
    Vec cand = es.eigenvectors().col(dom.n_ - 1);
    double worst = 1e300;
    for (const auto& p : pts) worst = std::min(worst, std::abs(cand.dot(p)));
    if (worst > 1e-8) {
      ell = cand;
    } else {
      // Greedy sign alignment, then use the mean direction.
      std::vector<double> sgn(pts.size(), 1.0);
      for (size_t i = 1; i < pts.size(); ++i) {
        double acc = 0.0;
        for (size_t j = 0; j < i; ++j) acc += sgn[j] * pts[i].dot(pts[j]);
        sgn[i] = acc >= 0 ? 1.0 : -1.0;
      }
      Vec mean = Vec::Zero(dom.n_);
      for (size_t i = 0; i < pts.size(); ++i) mean += sgn[i] * pts[i];
      if (mean.norm() < 1e-12)
        throw Error(ErrorCode::NotProperlyConvex, "no bounding chart found for hull");
      ell = unit(mean);
      worst = 1e300;
      for (const auto& p : pts) worst = std::min(worst, std::abs(ell.dot(p)));
      if (worst < 1e-10)
        throw Error(ErrorCode::NotProperlyConvex, "no bounding chart found for hull");
    }
  }
  for (const auto& p : pts) {
    if (std::abs(ell.dot(p)) < 1e-12)
      throw Error(ErrorCode::NotProperlyConvex, "hull vertex on the chart hyperplane");
  }
  for (auto& p : pts)
    if (ell.dot(p) < 0) p = -p;
  dom.vertices_ = pts;
  dom.chart_ = Chart::from_covector(ell);

  Vec mean = Vec::Zero(dom.n_);
  for (const auto& p : pts) mean += p;
  dom.interior_ = ProjPoint(mean, cfg);

  // Full dimensionality of the chart hull.
  Mat C(dom.n_ - 1, pts.size());
  Vec cmean = Vec::Zero(dom.n_ - 1);
  for (size_t i = 0; i < pts.size(); ++i) {
    C.col(i) = dom.chart_.to_chart(pts[i]);
    cmean += C.col(i);
  }
  cmean /= static_cast<double>(pts.size());
  C.colwise() -= cmean;
  Eigen::JacobiSVD<Mat> svd(C);
  const auto& sv = svd.singularValues();
  if (sv.size() < dom.n_ - 1 || sv[dom.n_ - 2] < 1e-10 * std::max(1.0, sv[0]))
    throw Error(ErrorCode::NotProperlyConvex, "hull is not full-dimensional");

  dom.build_facets(cfg);
  return dom;
}

double ConvexDomain::margin(const Vec& x) const {
  Vec u = unit(x);
  switch (kind_) {
    case DomainKind::Halfspace: {
      double m1 = 1e300, m2 = 1e300;
      for (const auto& w : walls_) {
        double v = w.dot(u);
        m1 = std::min(m1, v);
        m2 = std::min(m2, -v);
      }
      return std::max(m1, m2);
    }
    case DomainKind::Klein: {
      double pos = 0.0;
      for (int i = 0; i < klein_p_; ++i) pos += u[i] * u[i];
      return u[klein_p_] * u[klein_p_] - pos;
    }
    case DomainKind::Hull: {
      double d = chart_.ell.dot(u);
      if (std::abs(d) < kChartEps) return -1.0;
      Vec c = (chart_.basis.transpose() * u) / d;
      double m = 1e300;
      for (const auto& f : facets_) m = std::min(m, f.offset - f.normal.dot(c));
      return m;
    }
  }
  return -1.0;
}

Location ConvexDomain::locate(const ProjPoint& x, const Config& cfg) const {
  if (x.dim() != n_)
    throw Error(ErrorCode::DimensionMismatch, "point/domain dimension mismatch");
  double m = margin(x.rep());
  if (m > cfg.boundary_band) return Location::Interior;
  if (m < -cfg.boundary_band) return Location::Exterior;
  return Location::Boundary;
}

Vec ConvexDomain::frontier_point(const Vec& from_chart, const Vec& dir,
                                 const Config& cfg) const {
  Vec d = dir / dir.norm();
  auto inside = [&](double t) {
    return margin(chart_.from_chart(from_chart + t * d)) > 0.0;
  };
  if (!inside(0.0))
    throw Error(ErrorCode::NotInterior, "frontier ray must start inside");
  double lo = 0.0, hi = 1.0;
  while (inside(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > kRayCap)
      throw Error(ErrorCode::ChartDoesNotBound, "ray does not leave the domain");
  }
  while (hi - lo > cfg.bisect_tol * std::max(1.0, hi)) {
    double mid = 0.5 * (lo + hi);
    (inside(mid) ? lo : hi) = mid;
  }
  return chart_.from_chart(from_chart + 0.5 * (lo + hi) * d);
}

bool ConvexDomain::validate_properly_convex(const Config& cfg) const {
  Rng rng(cfg.seed);
  Vec c0 = chart_.to_chart(interior_.rep());
  for (int k = 0; k < cfg.properness_rays * n_; ++k) {
    Vec d = rng.unit_vec(n_ - 1);
    try {
      frontier_point(c0, d, cfg);
      frontier_point(c0, Vec(-d), cfg);
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

Location contains(const ConvexDomain& dom, const ProjPoint& x, const Config& cfg) {
  return dom.locate(x, cfg);
}

// ---------------------------------------------------------------------------
// Hilbert metric

namespace {

struct LineParams {
  double t_a, t_b;  // frontier parameters, y at 0, z at 1
  Vec a, b;         // homogeneous frontier representatives
};

LineParams boundary_params(const ConvexDomain& dom, const ProjPoint& y,
                           const ProjPoint& z, const Config& cfg) {
  const Chart& chart = dom.bounding_chart();
  Vec cy = chart.to_chart(y.rep());
  Vec cz = chart.to_chart(z.rep());
  Vec d = cz - cy;
  double len = d.norm();
  auto inside = [&](double t) { return dom.margin(chart.from_chart(cy + t * d)) > 0.0; };
  auto bisect = [&](double lo, double hi) {
    // lo inside, hi outside
    while (std::abs(hi - lo) > cfg.bisect_tol * std::max(1.0, std::abs(hi))) {
      double mid = 0.5 * (lo + hi);
      (inside(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  double hi = 1.0;
  double lo = 1.0;
  while (inside(hi)) {
    lo = hi;
    hi = 1.0 + (hi - 1.0) * 2.0 + 1.0;
    if ((hi - 1.0) * len > kRayCap)
      throw Error(ErrorCode::ChartDoesNotBound, "line does not leave the domain");
  }
  double tb = bisect(lo, hi);
  hi = 0.0;
  lo = 0.0;
  while (inside(hi)) {
    lo = hi;
    hi = hi * 2.0 - 1.0;
    if (-hi * len > kRayCap)
      throw Error(ErrorCode::ChartDoesNotBound, "line does not leave the domain");
  }
  double ta = bisect(lo, hi);
  return LineParams{ta, tb, chart.from_chart(cy + ta * d), chart.from_chart(cy + tb * d)};
}

}  // namespace

LineSection boundary_intersect(const ConvexDomain& dom, const ProjPoint& y,
                               const ProjPoint& z, const Config& cfg) {
  // Strictly positive computed margin; points this close to the frontier
  // still have a well-defined section even inside the Boundary band.
  if (dom.margin(y.rep()) <= 0.0 || dom.margin(z.rep()) <= 0.0)
    throw Error(ErrorCode::NotInterior, "boundary_intersect requires interior points");
  if (chordal_distance(y, z) < cfg.eps_point)
    throw Error(ErrorCode::CoincidentPoints, "boundary_intersect requires distinct points");
  LineParams lp = boundary_params(dom, y, z, cfg);
  return LineSection{ProjPoint(lp.a, cfg), y, z, ProjPoint(lp.b, cfg)};
}

double hilbert_distance(const ConvexDomain& dom, const ProjPoint& y,
                        const ProjPoint& z, const Config& cfg) {
  if (dom.margin(y.rep()) <= 0.0 || dom.margin(z.rep()) <= 0.0)
    throw Error(ErrorCode::NotInterior, "hilbert_distance requires interior points");
  if (chordal_distance(y, z) < 1e-13) return 0.0;
  LineParams lp = boundary_params(dom, y, z, cfg);
  // [a,y,z,b] in the affine line parameter (y at 0, z at 1).
  double cr = (lp.t_b * (1.0 - lp.t_a)) / ((lp.t_b - 1.0) * (-lp.t_a));
  return 0.5 * std::log(cr);
}

// ---------------------------------------------------------------------------
// Duality

ConvexDomain dual_domain(const ConvexDomain& dom, int m, const Config& cfg) {
  switch (dom.kind()) {
    case DomainKind::Halfspace: {
      if (!dom.validate_properly_convex(cfg))
        throw Error(ErrorCode::NotProperlyConvex, "dual of a non-properly-convex domain");
      return ConvexDomain::hull(dom.walls(), dom.interior_point().rep(), cfg);
    }
    case DomainKind::Klein:
      // Self-dual under the identification by diag(1,...,1,-1).
      return ConvexDomain::klein(dom.klein_p(), cfg);
    case DomainKind::Hull: {
      const Chart& chart = dom.bounding_chart();
      const auto& facets = dom.chart_facets();
      std::vector<Vec> covs;
      if (dom.dim() - 1 <= 3) {
        // Exact facet covectors; supporting hyperplanes sampled at frontier
        // points land on these, so enumerate them directly.
        size_t stride = facets.size() > static_cast<size_t>(m) ? facets.size() / m : 1;
        for (size_t i = 0; i < facets.size(); i += stride) {
          const auto& f = facets[i];
          covs.push_back(unit(f.offset * chart.ell - chart.basis * f.normal));
        }
      } else {
        Rng rng(cfg.seed);
        std::vector<Vec> cpts;
        for (const auto& v : dom.vertices()) cpts.push_back(chart.to_chart(v));
        for (int k = 0; k < m; ++k) {
          Vec u = rng.unit_vec(dom.dim() - 1);
          double h = -1e300;
          for (const auto& c : cpts) h = std::max(h, u.dot(c));
          covs.push_back(unit(h * chart.ell - chart.basis * u));
        }
      }
      return ConvexDomain::hull(covs, dom.interior_point().rep(), cfg);
    }
  }
  throw Error(ErrorCode::NumericalFailure, "unreachable");
}

// ---------------------------------------------------------------------------
// delta pseudo-distance

namespace {

// Homogeneous 2d coordinates along the projective line through y and z,
// with the frontier crossings of the domain.
struct LineArc {
  Vec u, w;              // orthonormal span of the line
  double theta_a, theta_b;  // frontier angles, y at 0 inside (theta_a < 0 < theta_b)
};

LineArc line_arc(const ConvexDomain& dom, const Vec& yhat, const Vec& zhat,
                 const Config& cfg) {
  LineArc arc;
  arc.u = yhat;
  Vec w = zhat - arc.u * arc.u.dot(zhat);
  if (w.norm() < 1e-14)
    throw Error(ErrorCode::CoincidentPoints, "coincident projective points");
  arc.w = unit(w);
  auto point = [&](double th) -> Vec { return std::cos(th) * arc.u + std::sin(th) * arc.w; };
  auto inside = [&](double th) { return dom.margin(point(th)) > 0.0; };
  auto sweep = [&](double dir) {
    double step = M_PI / 256.0;
    double lo = 0.0, hi = step * dir;
    while (inside(hi)) {
      lo = hi;
      hi += step * dir;
      if (std::abs(hi) > M_PI)
        throw Error(ErrorCode::NotProperlyConvex, "line stays inside the domain");
    }
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      (inside(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  arc.theta_b = sweep(+1.0);
  arc.theta_a = sweep(-1.0);
  return arc;
}

}  // namespace

double delta_pseudo(const ConvexDomain& dom, const ProjPoint& y, const ProjPoint& z,
                    const Config& cfg) {
  if (dom.locate(y, cfg) != Location::Interior)
    throw Error(ErrorCode::NotInterior, "delta requires an interior basepoint");
  LineArc arc = line_arc(dom, y.rep(), z.rep(), cfg);
  Eigen::Vector2d a2(std::cos(arc.theta_a), std::sin(arc.theta_a));
  Eigen::Vector2d b2(std::cos(arc.theta_b), std::sin(arc.theta_b));
  Eigen::Vector2d y2(1.0, 0.0);
  Eigen::Vector2d z2(z.rep().dot(arc.u), z.rep().dot(arc.w));
  ExtReal c1 = cross_ratio_1d(a2, y2, z2, b2);
  ExtReal c2 = cross_ratio_1d(b2, y2, z2, a2);
  if (c1.infinite || c2.infinite)
    throw Error(ErrorCode::NumericalFailure, "delta target on the frontier");
  return std::max(c1.value, c2.value);
}

double delta_pseudo(const ConvexDomain& dom, const ProjPoint& y,
                    const ProjHyperplane& H, const Config& cfg) {
  if (H.dim() != dom.dim())
    throw Error(ErrorCode::DimensionMismatch, "hyperplane/domain dimension mismatch");
  if (dom.locate(y, cfg) != Location::Interior)
    throw Error(ErrorCode::NotInterior, "delta requires an interior basepoint");

  // The hyperplane must miss the closure: sampled frontier check over
  // chart lifts, which all lie on one side of the lifted cone.
  const Chart& chart = dom.bounding_chart();
  Vec c0 = chart.to_chart(dom.interior_point().rep());
  Rng rng(cfg.seed);
  double sign0 = 0.0;
  {
    double v = H.covector().dot(unit(chart.from_chart(c0)));
    if (std::abs(v) < 1e-12)
      throw Error(ErrorCode::HyperplaneMeetsClosure, "hyperplane passes through the domain");
    sign0 = v > 0 ? 1.0 : -1.0;
  }
  const int n = dom.dim();
  for (int k = 0; k < std::max(64, 8 * n); ++k) {
    Vec f = dom.frontier_point(c0, rng.unit_vec(n - 1), cfg);
    double v = sign0 * H.covector().dot(unit(f));
    if (v < 1e-9)
      throw Error(ErrorCode::HyperplaneMeetsClosure,
                  "hyperplane meets the closure of the domain (sampled)");
  }

  Chart hchart = Chart::from_covector(H.covector());
  const Mat& B = hchart.basis;  // n x (n-1): z = B * w lies on H
  auto value = [&](const Vec& w) -> double {
    Vec zv = B * w;
    return delta_pseudo(dom, y, ProjPoint(zv, cfg), cfg);
  };

  double best = -1.0;
  Vec best_w = rng.unit_vec(n - 1);
  for (int k = 0; k < cfg.delta_grid; ++k) {
    Vec w = rng.unit_vec(n - 1);
    double v = value(w);
    if (v > best) {
      best = v;
      best_w = w;
    }
  }
  double sigma = 0.3;
  for (int it = 0; it < 400; ++it) {
    Vec w = unit(best_w + sigma * rng.gaussian_vec(n - 1));
    double v = value(w);
    if (v > best) {
      best = v;
      best_w = w;
    }
    sigma *= 0.985;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Center of mass

namespace {

// Exact area centroid of the chart polygon given by its facets (dim 2).
Vec polygon_centroid(const std::vector<Vec>& hull_pts) {
  double A = 0.0;
  double cx = 0.0, cy = 0.0;
  const int k = static_cast<int>(hull_pts.size());
  for (int i = 0; i < k; ++i) {
    const Vec& p = hull_pts[i];
    const Vec& q = hull_pts[(i + 1) % k];
    double w = p[0] * q[1] - q[0] * p[1];
    A += w;
    cx += (p[0] + q[0]) * w;
    cy += (p[1] + q[1]) * w;
  }
  A *= 0.5;
  Vec c(2);
  c << cx / (6.0 * A), cy / (6.0 * A);
  return c;
}

// Vertex enumeration of a bounded chart polygon {c : lines_i . c <= off_i}.
std::vector<Vec> polygon_vertices(const std::vector<Vec>& normals,
                                  const std::vector<double>& offsets) {
  const int m = static_cast<int>(normals.size());
  std::vector<Vec> verts;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Eigen::Matrix2d A;
      A << normals[i][0], normals[i][1], normals[j][0], normals[j][1];
      if (std::abs(A.determinant()) < 1e-13) continue;
      Eigen::Vector2d rhs(offsets[i], offsets[j]);
      Eigen::Vector2d c = A.colPivHouseholderQr().solve(rhs);
      bool ok = true;
      for (int k = 0; k < m; ++k) {
        if (normals[k][0] * c[0] + normals[k][1] * c[1] > offsets[k] + 1e-9) {
          ok = false;
          break;
        }
      }
      if (ok) {
        Vec v(2);
        v << c[0], c[1];
        verts.push_back(v);
      }
    }
  }
  return verts;
}

// Chart-coordinate inequalities of a halfspace domain: interior points
// satisfy normal . c < offset for every wall that cuts the chart.
void halfspace_chart_lines(const ConvexDomain& dom, const Chart& chart,
                           std::vector<Vec>& normals, std::vector<double>& offsets) {
  for (const auto& w : dom.walls()) {
    Vec nrm = -(chart.basis.transpose() * w);
    double off = w.dot(chart.ell);
    double len = nrm.norm();
    if (len < 1e-14) {
      if (off <= 0)
        throw Error(ErrorCode::ChartDoesNotBound, "wall excludes the whole chart");
      continue;  // vacuous in this chart
    }
    normals.push_back(nrm / len);
    offsets.push_back(off / len);
  }
}

}  // namespace

ProjPoint center_of_mass(const ConvexDomain& dom, const Config& cfg) {
  const Chart& chart = dom.bounding_chart();
  const int d = dom.dim() - 1;

  if (dom.kind() == DomainKind::Klein) return dom.interior_point();

  if (d == 2 &&
      (dom.kind() == DomainKind::Halfspace || dom.kind() == DomainKind::Hull)) {
    // Exact polygon centroid.
    std::vector<Vec> normals;
    std::vector<double> offsets;
    if (dom.kind() == DomainKind::Halfspace) {
      if (!dom.validate_properly_convex(cfg))
        throw Error(ErrorCode::ChartDoesNotBound, "domain unbounded in its chart");
      halfspace_chart_lines(dom, chart, normals, offsets);
    } else {
      for (const auto& f : dom.chart_facets()) {
        normals.push_back(f.normal);
        offsets.push_back(f.offset);
      }
    }
    std::vector<Vec> verts = polygon_vertices(normals, offsets);
    if (verts.size() >= 3) {
      Vec meanv = Vec::Zero(2);
      for (const auto& v : verts) meanv += v;
      meanv /= static_cast<double>(verts.size());
      std::sort(verts.begin(), verts.end(), [&](const Vec& a, const Vec& b) {
        return std::atan2(a[1] - meanv[1], a[0] - meanv[0]) <
               std::atan2(b[1] - meanv[1], b[0] - meanv[0]);
      });
      Vec c = polygon_centroid(verts);
      return ProjPoint(chart.from_chart(c), cfg);
    }
  }

  // Monte-Carlo fallback (seeded, deterministic).
  if (!dom.validate_properly_convex(cfg))
    throw Error(ErrorCode::ChartDoesNotBound, "domain unbounded in its chart");
  Vec c0 = chart.to_chart(dom.interior_point().rep());
  Vec lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    Vec e = Vec::Zero(d);
    e[i] = 1.0;
    hi[i] = chart.to_chart(dom.frontier_point(c0, e, cfg))[i];
    lo[i] = chart.to_chart(dom.frontier_point(c0, Vec(-e), cfg))[i];
    double pad = 0.05 * (hi[i] - lo[i]);
    hi[i] += pad;
    lo[i] -= pad;
  }
  Rng rng(cfg.seed);
  Vec acc = Vec::Zero(d);
  long accepted = 0, tries = 0;
  const long cap = 400L * cfg.com_samples;
  while (accepted < cfg.com_samples) {
    if (++tries > cap)
      throw Error(ErrorCode::ChartDoesNotBound, "rejection sampling failed");
    Vec c(d);
    for (int i = 0; i < d; ++i) c[i] = rng.uniform(lo[i], hi[i]);
    if (dom.margin(chart.from_chart(c)) > 0.0) {
      acc += c;
      ++accepted;
    }
  }
  return ProjPoint(chart.from_chart(acc / static_cast<double>(accepted)), cfg);
}

// ---------------------------------------------------------------------------
// Omega_max

OmegaMaxResult omega_max(const std::vector<ProjHyperplane>& dual_cloud,
                         const ProjPoint& hint, const Config& cfg) {
  if (dual_cloud.empty())
    throw Error(ErrorCode::BadParameters, "omega_max needs a nonempty dual cloud");
  std::vector<Vec> walls;
  walls.reserve(dual_cloud.size());
  for (const auto& h : dual_cloud) {
    double v = h.covector().dot(hint.rep());
    if (std::abs(v) < 1e-10)
      throw Error(ErrorCode::NoConsistentLift,
                  "a dual covector vanishes on the orientation hint");
    walls.push_back(v > 0 ? h.covector() : Vec(-h.covector()));
  }
  OmegaMaxResult out{ConvexDomain::halfspace(walls, hint.rep(), cfg), false};
  out.properly_convex = out.domain.validate_properly_convex(cfg);
  return out;
}

}  // namespace convexcore
