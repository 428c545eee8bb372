#include "convexcore/limitsets.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "convexcore/rng.hpp"

namespace convexcore {

PointCloud proximal_limit_set(const BallIndex& ball, int n, double tau,
                              const Config& cfg) {
  PointCloud cloud(n, cfg.cloud_dedup);
  for (const auto& e : ball.elements()) {
    if (e.length() == 0) continue;
    SpectralData s = spectral(e.matrix);
    if (s.lambda_gap(1, 2) <= tau) continue;
    CloudPoint p;
    p.point = attracting_fixed_point(e.matrix, cfg);
    p.source = CloudSource::ProximalFixedPoint;
    p.word_length = e.length();
    cloud.add(p);
  }
  return cloud;
}

std::vector<ProjHyperplane> dual_proximal_limit_set(const BallIndex& ball,
                                                    double tau, const Config& cfg) {
  std::vector<ProjHyperplane> out;
  for (const auto& e : ball.elements()) {
    if (e.length() == 0) continue;
    const int n = e.matrix.dim();
    SpectralData s = spectral(e.matrix);
    if (s.lambda_gap(n - 1, n) <= tau) continue;
    ProjHyperplane h = attracting_fixed_hyperplane(e.matrix, cfg);
    bool dup = false;
    for (const auto& o : out)
      if (chordal_distance(o.covector(), h.covector()) <= cfg.cloud_dedup) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(h);
  }
  return out;
}

PointCloud orbital_limit_set(const BallIndex& ball, const ConvexDomain& dom,
                             const std::vector<ProjPoint>& seeds, int tail_lo,
                             int tail_hi, const Config& cfg) {
  for (const auto& s : seeds)
    if (dom.locate(s, cfg) != Location::Interior)
      throw Error(ErrorCode::NotInterior, "orbital limit set seeds must be interior");
  PointCloud cloud(dom.dim(), cfg.cloud_dedup);
  for (const auto& e : ball.elements()) {
    if (e.length() < tail_lo || e.length() > tail_hi) continue;
    for (std::size_t si = 0; si < seeds.size(); ++si) {
      CloudPoint p;
      p.point = e.matrix.apply(seeds[si]);
      p.source = CloudSource::OrbitTail;
      p.seed_index = static_cast<int>(si);
      p.word_length = e.length();
      cloud.add(p);
    }
  }
  return cloud;
}

namespace {

// Aligned lift of b against a (nonnegative inner product).
Vec aligned(const Vec& a, const Vec& b) { return a.dot(b) >= 0 ? b : Vec(-b); }

bool segment_probes_pass(const PointCloud& cloud, const ConvexDomain& dom,
                         const Vec& pa, const Vec& pb, double eps, int k,
                         const Config& cfg) {
  Vec b = aligned(pa, pb);
  for (int t = 1; t <= k; ++t) {
    double f = static_cast<double>(t) / (k + 1);
    ProjPoint s = ProjPoint((1.0 - f) * pa + f * b, cfg);
    if (dom.locate(s, cfg) == Location::Interior) return false;
    if (cloud.nearest_within(s, eps) < 0) return false;
  }
  return true;
}

}  // namespace

std::vector<SegmentHit> detect_segments(const PointCloud& cloud,
                                        const ConvexDomain& dom, double eps, int k,
                                        const Config& cfg) {
  std::vector<SegmentHit> hits;
  const auto& pts = cloud.points();
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (chordal_distance(pts[i].point, pts[j].point) <= 3.0 * eps) continue;
      if (segment_probes_pass(cloud, dom, pts[i].point.rep(), pts[j].point.rep(),
                              eps, k, cfg))
        hits.push_back({i, j});
    }
  }
  return hits;
}

std::vector<PetHit> detect_pets(const PointCloud& cloud, const ConvexDomain& dom,
                                double eps, const Config& cfg) {
  std::vector<PetHit> hits;
  auto segments = detect_segments(cloud, dom, eps, cfg.segment_probes, cfg);
  const auto& pts = cloud.points();
  std::set<std::pair<int, int>> seg_set;
  std::vector<std::vector<int>> adj(cloud.size());
  for (const auto& s : segments) {
    seg_set.insert({s.i, s.j});
    adj[s.i].push_back(s.j);
  }
  constexpr std::size_t kMaxPets = 1000;
  for (const auto& s : segments) {
    for (int k : adj[s.j]) {
      if (!seg_set.count({s.i, k})) continue;
      const Vec& a = pts[s.i].point.rep();
      Vec b = aligned(a, pts[s.j].point.rep());
      Vec c = aligned(a, pts[k].point.rep());
      Mat tri(3, a.size());
      tri.row(0) = a;
      tri.row(1) = b;
      tri.row(2) = c;
      Eigen::JacobiSVD<Mat> svd(tri);
      if (svd.singularValues()(2) <= cfg.pet_span_margin) continue;  // degenerate
      ProjPoint bary = ProjPoint(a + b + c, cfg);
      if (dom.locate(bary, cfg) != Location::Interior) continue;
      hits.push_back({s.i, s.j, k});
      if (hits.size() >= kMaxPets) return hits;
    }
  }
  return hits;
}

ConvexCoreResult convex_core(const PointCloud& cloud, const ConvexDomain& dom,
                             const std::vector<ProjPoint>& orbit_points,
                             const Config& cfg) {
  ConvexCoreResult out;
  if (cloud.size() == 0)
    throw Error(ErrorCode::BadParameters, "convex core of an empty cloud");
  std::vector<Vec> lifts;
  lifts.reserve(cloud.size());
  for (const auto& p : cloud.points()) lifts.push_back(p.point.rep());
  try {
    out.core = ConvexDomain::hull(lifts, dom.bounding_chart().ell, cfg);
  } catch (const Error&) {
    out.degenerate = true;
    out.rho_hat = std::numeric_limits<double>::infinity();
    return out;
  }

  // rho_hat: sup over hull samples of the Hilbert distance to the orbit.
  Rng rng(cfg.seed);
  const auto& verts = out.core->vertices();
  double sup = 0.0;
  for (int s = 0; s < cfg.core_samples; ++s) {
    Vec acc = Vec::Zero(dom.dim());
    for (const auto& v : verts) acc += v * (-std::log(1.0 - rng.uniform()));
    ProjPoint sample(acc, cfg);
    if (dom.locate(sample, cfg) != Location::Interior) continue;
    // Chordal prefilter, exact Hilbert distance on the closest few.
    std::vector<std::pair<double, std::size_t>> pre;
    pre.reserve(orbit_points.size());
    for (std::size_t i = 0; i < orbit_points.size(); ++i)
      pre.emplace_back(chordal_distance(sample, orbit_points[i]), i);
    std::partial_sort(pre.begin(), pre.begin() + std::min<std::size_t>(8, pre.size()),
                      pre.end());
    double best = 1e300;
    for (std::size_t t = 0; t < std::min<std::size_t>(8, pre.size()); ++t) {
      const ProjPoint& o = orbit_points[pre[t].second];
      if (dom.locate(o, cfg) != Location::Interior) continue;
      double d = chordal_distance(sample, o) < 1e-13
                     ? 0.0
                     : hilbert_distance(dom, sample, o, cfg);
      best = std::min(best, d);
    }
    if (best < 1e300) sup = std::max(sup, best);
  }
  out.rho_hat = sup;
  return out;
}

const char* verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::StronglyCCConsistent: return "StronglyCCConsistent";
    case VerdictKind::NonHyperbolicCCConsistent: return "NonHyperbolicCCConsistent";
    case VerdictKind::NoInvariantConvexSetFound: return "NoInvariantConvexSetFound";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

namespace {

// Deterministic subsample keeping the first `keep` points evenly.
PointCloud subsample(const PointCloud& cloud, std::size_t keep, const Config& cfg) {
  if (cloud.size() <= keep) return cloud;
  PointCloud out(cloud.dim(), cloud.dedup_tol());
  std::size_t stride = cloud.size() / keep + 1;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto& p = cloud.points()[i];
    if (p.source == CloudSource::ProximalFixedPoint && p.word_length <= 2) {
      out.add(p);  // keep short-word fixed points, they anchor the vertices
      continue;
    }
    if (i % stride == 0) out.add(p);
  }
  return out;
}

std::optional<ConvexDomain> construct_domain(const BallIndex& ball,
                                             std::vector<std::string>& notes,
                                             const Config& cfg) {
  auto duals = dual_proximal_limit_set(ball, cfg.tau_proximal, cfg);
  if (duals.empty()) {
    notes.push_back("no dual-proximal elements in the ball; no invariant domain candidate");
    return std::nullopt;
  }
  PointCloud prox = proximal_limit_set(ball, duals[0].dim(), cfg.tau_proximal, cfg);
  std::vector<Vec> hints;
  if (prox.size() > 0) {
    // Greedy-aligned mean of the primal cloud.
    Vec mean = prox.points()[0].point.rep();
    for (std::size_t i = 1; i < prox.size(); ++i)
      mean += aligned(prox.points()[0].point.rep(), prox.points()[i].point.rep());
    if (mean.norm() > 1e-10) hints.push_back(mean / mean.norm());
    Mat M = Mat::Zero(prox.dim(), prox.dim());
    for (const auto& p : prox.points()) M += p.point.rep() * p.point.rep().transpose();
    Eigen::SelfAdjointEigenSolver<Mat> es(M);
    hints.push_back(es.eigenvectors().col(prox.dim() - 1));
  }
  for (const auto& h : hints) {
    try {
      OmegaMaxResult om = omega_max(duals, ProjPoint(h, cfg), cfg);
      notes.push_back(om.properly_convex
                          ? "Omega_max constructed from the dual cloud (properly convex)"
                          : "Omega_max constructed but properness validation failed");
      if (om.properly_convex) return om.domain;
    } catch (const Error&) {
      continue;
    }
  }
  notes.push_back("no consistent lift of the dual cloud around any hint");
  return std::nullopt;
}

}  // namespace

Verdict verdict(const GroupSpec& spec, std::optional<ConvexDomain> dom, int R,
                const Config& cfg) {
  Verdict v;
  v.radius = R;
  BallIndex ball = word_ball(spec, R, cfg);
  v.gap = gap_profile(ball, 1, 2, cfg);

  if (!dom) {
    dom = construct_domain(ball, v.notes, cfg);
    v.domain_constructed = true;
    if (!dom) {
      v.kind = VerdictKind::NoInvariantConvexSetFound;
      return v;
    }
  } else {
    try {
      check_invariance(spec, *dom, cfg);
    } catch (const Error& e) {
      v.notes.push_back(std::string("invariance check failed: ") + e.what());
      v.kind = VerdictKind::Inconclusive;
      return v;
    }
  }

  // Detector cloud: proximal fixed points first (they anchor extreme
  // points exactly), then orbit tails from three interior seeds.
  PointCloud prox = proximal_limit_set(ball, spec.n, cfg.tau_proximal, cfg);
  Rng rng(cfg.seed);
  const Chart& chart = dom->bounding_chart();
  Vec c0 = chart.to_chart(dom->interior_point().rep());
  std::vector<ProjPoint> seeds{dom->interior_point()};
  for (int s = 0; s < 2; ++s) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Vec c = c0 + 0.2 * rng.gaussian_vec(dom->dim() - 1);
      ProjPoint cand(chart.from_chart(c), cfg);
      if (dom->locate(cand, cfg) == Location::Interior) {
        seeds.push_back(cand);
        break;
      }
    }
  }
  PointCloud orb = orbital_limit_set(ball, *dom, seeds, std::max(0, R - 2), R, cfg);
  PointCloud merged(spec.n, cfg.cloud_dedup);
  for (const auto& p : prox.points()) merged.add(p);
  for (const auto& p : orb.points()) merged.add(p);
  PointCloud detector_cloud = subsample(merged, cfg.detector_cloud_cap, cfg);
  v.cloud_size = detector_cloud.size();
  v.epsilon_used = cfg.verdict_eps;

  v.segments = detect_segments(detector_cloud, *dom, v.epsilon_used,
                               cfg.segment_probes, cfg);
  v.pets = detect_pets(detector_cloud, *dom, v.epsilon_used, cfg);
  for (const auto& p : detector_cloud.points()) v.cloud_points.push_back(p);

  // Cocompactness heuristic at R and R-2.
  std::vector<ProjPoint> orbit_full, orbit_prev;
  for (const auto& e : ball.elements()) {
    orbit_full.push_back(e.matrix.apply(seeds[0]));
    if (e.length() <= R - 2) orbit_prev.push_back(orbit_full.back());
  }
  ConvexCoreResult core = convex_core(detector_cloud, *dom, orbit_full, cfg);
  ConvexCoreResult core_prev = convex_core(detector_cloud, *dom, orbit_prev, cfg);
  v.core_degenerate = core.degenerate;
  v.rho_hat = core.rho_hat;
  v.rho_hat_prev = core_prev.rho_hat;
  v.core_stable = !core.degenerate && std::isfinite(core.rho_hat) &&
                  std::abs(core.rho_hat - core_prev.rho_hat) <= cfg.core_stable_tol;

  if (!v.pets.empty()) {
    v.kind = v.core_stable ? VerdictKind::NonHyperbolicCCConsistent
                           : VerdictKind::Inconclusive;
    if (!v.core_stable)
      v.notes.push_back("PET found but the core heuristic did not stabilize");
  } else if (!v.segments.empty()) {
    v.kind = VerdictKind::Inconclusive;
    v.notes.push_back("segments without PETs at this resolution");
  } else if (v.gap.verdict == GapVerdict::AnosovConsistent && v.core_stable) {
    v.kind = VerdictKind::StronglyCCConsistent;
  } else {
    v.kind = VerdictKind::Inconclusive;
    if (v.core_degenerate) v.notes.push_back("degenerate convex core");
    if (!v.core_stable && !v.core_degenerate)
      v.notes.push_back("core heuristic did not stabilize");
    if (v.gap.verdict == GapVerdict::NotAnosov)
      v.notes.push_back("gap profile bounded (NotAnosov) with no PET found");
  }
  return v;
}

double chordal_hausdorff(const PointCloud& a, const PointCloud& b) {
  double h = 0.0;
  for (const auto& p : a.points()) h = std::max(h, b.nearest_distance(p.point));
  for (const auto& p : b.points()) h = std::max(h, a.nearest_distance(p.point));
  return h;
}

double equivariance_defect(const GroupSpec& spec, const PointCloud& cloud,
                           const Config& cfg) {
  double worst = 0.0;
  for (const auto& g : spec.alphabet()) {
    PointCloud mapped(cloud.dim(), cloud.dedup_tol());
    for (const auto& p : cloud.points()) {
      CloudPoint q = p;
      q.point = g.matrix.apply(p.point);
      mapped.add(q);
    }
    worst = std::max(worst, chordal_hausdorff(mapped, cloud));
  }
  return worst;
}

double conical_diagnostic(const ConvexDomain& dom,
                          const std::vector<ProjPoint>& orbit_points,
                          const ProjPoint& z, const ProjPoint& basepoint,
                          const Config& cfg) {
  // Distance of orbit points to the projective ray [basepoint, z): max over
  // the orbit points converging to z of min Hilbert distance to ray samples.
  const Chart& chart = dom.bounding_chart();
  Vec cb = chart.to_chart(basepoint.rep());
  Vec cz = chart.to_chart(z.rep());
  std::vector<ProjPoint> ray;
  for (int k = 0; k < 64; ++k) {
    double f = 1.0 - std::pow(0.8, k);
    ProjPoint p(chart.from_chart(cb + f * (cz - cb)), cfg);
    if (dom.locate(p, cfg) == Location::Interior) ray.push_back(p);
  }
  double worst = 0.0;
  for (const auto& o : orbit_points) {
    if (chordal_distance(o, z) > 0.2) continue;  // only the tail toward z
    if (dom.locate(o, cfg) != Location::Interior) continue;
    double best = 1e300;
    for (const auto& r : ray) {
      double d = chordal_distance(o, r) < 1e-13 ? 0.0 : hilbert_distance(dom, o, r, cfg);
      best = std::min(best, d);
    }
    if (best < 1e300) worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace convexcore
