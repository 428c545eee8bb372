#pragma once

#include <string>
#include <vector>

#include "convexcore/cloud.hpp"
#include "convexcore/domains.hpp"
#include "convexcore/projlin.hpp"

namespace convexcore {

struct Generator {
  std::string label;
  ProjMat matrix;
};

/// A finitely generated subgroup of PGL(n,R), given by generators.
struct GroupSpec {
  int n = 0;
  std::vector<Generator> generators;
  bool include_inverses = true;

  /// Generators plus inverses (when included), the alphabet of words.
  std::vector<Generator> alphabet() const;
};

struct GroupElement {
  std::vector<int> word;  // indices into the alphabet; shortest witness found
  ProjMat matrix;

  int length() const { return static_cast<int>(word.size()); }
};

/// All group elements of word length <= R with geodesic witness words,
/// deduplicated by quantized canonical-matrix hashing.
class BallIndex {
 public:
  int radius() const { return radius_; }
  const std::vector<GroupElement>& elements() const { return elems_; }
  std::size_t ball_size() const { return elems_.size(); }
  std::size_t sphere_size(int r) const;
  /// [begin, end) indices of sphere(r) inside elements().
  std::pair<std::size_t, std::size_t> sphere_range(int r) const;

  /// Pairs of element indices whose matrices landed within 10 eps_mat but
  /// not eps_mat of each other: quantization hazards, reported not merged.
  const std::vector<std::pair<std::size_t, std::size_t>>& collisions() const {
    return collisions_;
  }

  friend BallIndex word_ball(const GroupSpec& spec, int R, const Config& cfg,
                             int jobs);

 private:
  int radius_ = 0;
  std::vector<GroupElement> elems_;
  std::vector<std::size_t> offsets_;  // offsets_[r] = first index of sphere(r)
  std::vector<std::pair<std::size_t, std::size_t>> collisions_;
};

BallIndex word_ball(const GroupSpec& spec, int R,
                    const Config& cfg = default_config(), int jobs = 1);

/// {g . s : g in ball(R), s in seeds}, tagged by seed and word length.
PointCloud orbit(const GroupSpec& spec, const BallIndex& ball,
                 const ConvexDomain& dom, const std::vector<ProjPoint>& seeds,
                 const Config& cfg = default_config());

/// Checks that the generators preserve the domain, by sampled frontier
/// preservation.
void check_invariance(const GroupSpec& spec, const ConvexDomain& dom,
                      const Config& cfg = default_config());

struct QiDefect {
  double kappa_hat = 0.0;
  std::size_t violations = 0;  // zero by construction of kappa_hat
  std::size_t argmax = 0;      // index of the maximizing element
  // Orbit points whose computed margin collapses to the frontier at double
  // precision (Hilbert distance not computable there); skipped.
  std::size_t skipped_near_frontier = 0;
};

/// kappa_hat = max over the ball of 2 d_Omega(z, g z) - (mu_1 - mu_n)(g).
QiDefect qi_defect(const GroupSpec& spec, const BallIndex& ball,
                   const ConvexDomain& dom, const ProjPoint& z,
                   const Config& cfg = default_config());

enum class GapVerdict { AnosovConsistent, NotAnosov, Inconclusive };

struct GapRadiusStats {
  int r = 0;
  std::size_t count = 0;
  double min = 0.0, mean = 0.0, max = 0.0;
};

struct GapProfile {
  int i = 1, j = 2;
  std::vector<GapRadiusStats> per_radius;
  double slope = 0.0;  // least-squares slope of min vs r (r >= 1)
  double r2 = 0.0;
  GapVerdict verdict = GapVerdict::Inconclusive;
};

GapProfile gap_profile(const BallIndex& ball, int i, int j,
                       const Config& cfg = default_config());

const char* gap_verdict_name(GapVerdict v);

}  // namespace convexcore
