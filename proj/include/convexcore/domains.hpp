#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "convexcore/projlin.hpp"

namespace convexcore {

enum class DomainKind { Halfspace, Klein, Hull };
enum class Location { Interior, Boundary, Exterior };

/// Affine chart of P(V): the points with ell(x) != 0, mapped to R^{n-1} by
/// x -> B^T x / ell(x) for an orthonormal basis B of {ell = 0}.
struct Chart {
  Vec ell;    // unit covector
  Mat basis;  // n x (n-1), orthonormal columns spanning {ell = 0}

  static Chart from_covector(const Vec& ell);
  Vec to_chart(const Vec& x) const;
  Vec from_chart(const Vec& c) const;  // lift with ell(x) = 1
};

/// Hyperplane description of a polytope in chart coordinates:
/// interior = {c : normal . c < offset} for every facet.
struct ChartFacet {
  Vec normal;  // unit
  double offset = 0.0;
};

/// A properly convex open subset of P(V) in one of three representations.
class ConvexDomain {
 public:
  /// Omega = P({x : wall_i(x) > 0 for all i}). Wall signs are data.
  static ConvexDomain halfspace(const std::vector<Vec>& walls,
                                std::optional<Vec> interior_hint = std::nullopt,
                                const Config& cfg = default_config());
  /// H^{p,0}: x_1^2 + ... + x_p^2 < x_{p+1}^2 in P(R^{p+1}).
  static ConvexDomain klein(int p, const Config& cfg = default_config());
  /// Interior of the convex hull of the given points, in the chart of a
  /// covector avoided by all of them.
  static ConvexDomain hull(const std::vector<Vec>& points,
                           std::optional<Vec> chart_ell = std::nullopt,
                           const Config& cfg = default_config());

  DomainKind kind() const { return kind_; }
  int dim() const { return n_; }  // n = dim V
  const ProjPoint& interior_point() const { return interior_; }
  const std::vector<Vec>& walls() const { return walls_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  int klein_p() const { return klein_p_; }

  /// A chart in which the domain is bounded (when properly convex).
  const Chart& bounding_chart() const { return chart_; }

  /// Signed interiority margin; only the sign and the Boundary band are
  /// meaningful across representations.
  double margin(const Vec& x) const;
  Location locate(const ProjPoint& x, const Config& cfg = default_config()) const;

  /// Frontier point hit by the ray from `from` (chart coords) in chart
  /// direction `dir`.
  Vec frontier_point(const Vec& from_chart, const Vec& dir,
                     const Config& cfg = default_config()) const;

  /// Ray-shooting properness validation: every ray from the interior point
  /// must leave the domain at finite chart parameter.
  bool validate_properly_convex(const Config& cfg = default_config()) const;

  /// Facets of the chart polytope (Halfspace/Hull, chart dim <= 3).
  const std::vector<ChartFacet>& chart_facets() const;

 private:
  ConvexDomain() = default;

  DomainKind kind_ = DomainKind::Klein;
  int n_ = 0;
  std::vector<Vec> walls_;     // Halfspace
  int klein_p_ = 0;            // Klein
  std::vector<Vec> vertices_;  // Hull (unit lifts, chart-positive)
  Chart chart_;
  ProjPoint interior_;
  std::vector<ChartFacet> facets_;  // chart-polytope facets when available

  void build_facets(const Config& cfg);
};

/// A line through two interior points with its frontier endpoints,
/// ordered a, y, z, b.
struct LineSection {
  ProjPoint a, y, z, b;
};

Location contains(const ConvexDomain& dom, const ProjPoint& x,
                  const Config& cfg = default_config());

LineSection boundary_intersect(const ConvexDomain& dom, const ProjPoint& y,
                               const ProjPoint& z,
                               const Config& cfg = default_config());

double hilbert_distance(const ConvexDomain& dom, const ProjPoint& y,
                        const ProjPoint& z, const Config& cfg = default_config());

/// Dual domain in P(V*). For Halfspace the dual is exact (hull of the
/// defining covectors); for Hull/Klein it is assembled from supporting
/// hyperplanes at frontier points (all facets when the exact chart hull
/// is available, otherwise m sampled support directions).
ConvexDomain dual_domain(const ConvexDomain& dom, int m = 256,
                         const Config& cfg = default_config());

/// delta_Omega(y, z) = max{[a,y,z,b], [b,y,z,a]}; equals exp(2 d_Omega)
/// for z interior and lies in [-1, 0) for z exterior.
double delta_pseudo(const ConvexDomain& dom, const ProjPoint& y,
                    const ProjPoint& z, const Config& cfg = default_config());

/// max_{z in H} delta_Omega(y, z); H must miss the closure of the domain.
double delta_pseudo(const ConvexDomain& dom, const ProjPoint& y,
                    const ProjHyperplane& H,
                    const Config& cfg = default_config());

/// Center of mass in the bounding chart: exact for chart polytopes of
/// dimension <= 3 and for Klein balls, Monte-Carlo (seeded) otherwise.
ProjPoint center_of_mass(const ConvexDomain& dom,
                         const Config& cfg = default_config());

struct OmegaMaxResult {
  ConvexDomain domain;
  bool properly_convex = false;
};

/// Omega_max: the halfspace domain cut out by a consistently signed lift
/// of the dual cloud; need not be properly convex, so the flag is reported.
OmegaMaxResult omega_max(const std::vector<ProjHyperplane>& dual_cloud,
                         const ProjPoint& orientation_hint,
                         const Config& cfg = default_config());

}  // namespace convexcore
