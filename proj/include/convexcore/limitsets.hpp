#pragma once

#include <optional>
#include <string>
#include <vector>

#include "convexcore/cloud.hpp"
#include "convexcore/domains.hpp"
#include "convexcore/groups.hpp"

namespace convexcore {

/// Attracting fixed points of the proximal elements of the ball.
PointCloud proximal_limit_set(const BallIndex& ball, int n, double tau = 1e-8,
                              const Config& cfg = default_config());

/// Attracting fixed hyperplanes of the dual-proximal elements of the ball.
std::vector<ProjHyperplane> dual_proximal_limit_set(
    const BallIndex& ball, double tau = 1e-8, const Config& cfg = default_config());

/// Orbit points with word length in [tail_lo, tail_hi]; the finite-radius
/// surrogate for the full orbital limit set.
PointCloud orbital_limit_set(const BallIndex& ball, const ConvexDomain& dom,
                             const std::vector<ProjPoint>& seeds, int tail_lo,
                             int tail_hi, const Config& cfg = default_config());

struct SegmentHit {
  int i = 0, j = 0;  // cloud point indices
};

struct PetHit {
  int i = 0, j = 0, k = 0;
};

/// Pairs (a,b) of cloud points, > 3 eps apart, whose uniformly spaced
/// interior probes all lie within eps of the cloud and off the interior
/// of the domain. Empty result = no segment found at this resolution.
std::vector<SegmentHit> detect_segments(const PointCloud& cloud,
                                        const ConvexDomain& dom, double eps = 1e-2,
                                        int k = 16,
                                        const Config& cfg = default_config());

/// Plane-spanning triples whose three edges pass the segment test and
/// whose barycenter is interior: properly-embedded-triangle candidates.
std::vector<PetHit> detect_pets(const PointCloud& cloud, const ConvexDomain& dom,
                                double eps = 1e-2,
                                const Config& cfg = default_config());

struct ConvexCoreResult {
  bool degenerate = false;
  std::optional<ConvexDomain> core;
  double rho_hat = 0.0;  // sup over hull samples of d_Omega to the orbit
};

/// Hull of the cloud inside the domain plus the cocompactness heuristic
/// rho_hat against the given orbit of one interior point.
ConvexCoreResult convex_core(const PointCloud& cloud, const ConvexDomain& dom,
                             const std::vector<ProjPoint>& orbit_points,
                             const Config& cfg = default_config());

enum class VerdictKind {
  StronglyCCConsistent,
  NonHyperbolicCCConsistent,
  NoInvariantConvexSetFound,
  Inconclusive,
};

const char* verdict_name(VerdictKind v);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  GapProfile gap;
  std::vector<SegmentHit> segments;
  std::vector<PetHit> pets;
  double rho_hat = 0.0;
  double rho_hat_prev = 0.0;  // at radius R-2
  bool core_degenerate = false;
  bool core_stable = false;
  double epsilon_used = 0.0;  // detector resolution of this verdict
  int radius = 0;
  std::size_t cloud_size = 0;
  bool domain_constructed = false;  // Omega_max built from the dual cloud
  std::vector<std::string> notes;
  std::vector<CloudPoint> cloud_points;  // merged detector cloud
};

/// Combines the gap profile, the segment/PET detectors, and the convex-core
/// heuristic. Consistency at resolution (R, eps) only, never a proof.
Verdict verdict(const GroupSpec& spec, std::optional<ConvexDomain> dom, int R,
                const Config& cfg = default_config());

/// Hausdorff distance between the point sets, in the chordal metric.
double chordal_hausdorff(const PointCloud& a, const PointCloud& b);

/// Max over generators of Hausdorff(g . cloud, cloud): how far the sampled
/// cloud is from being invariant (bounded by the tail truncation error).
double equivariance_defect(const GroupSpec& spec, const PointCloud& cloud,
                           const Config& cfg = default_config());

/// Distance of orbit points to the projective ray fitted toward z: the
/// per-point conical-limit diagnostic.
double conical_diagnostic(const ConvexDomain& dom,
                          const std::vector<ProjPoint>& orbit_points,
                          const ProjPoint& z, const ProjPoint& basepoint,
                          const Config& cfg = default_config());

}  // namespace convexcore
