#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "convexcore/projlin.hpp"

namespace convexcore {

enum class CloudSource { ProximalFixedPoint, OrbitTail, Seed };

struct CloudPoint {
  ProjPoint point;
  CloudSource source = CloudSource::Seed;
  int seed_index = -1;
  int word_length = 0;
};

/// Spatial hash over canonical representatives for fast nearest-point
/// queries in the chordal metric. Points whose canonical reps straddle a
/// sign flip are treated as distant, like everywhere else in the library.
class NNGrid {
 public:
  NNGrid(int n, double cell);
  void insert(const ProjPoint& p, int payload);
  void insert_all(const std::vector<ProjPoint>& pts);

  struct Hit {
    int payload = -1;
    double distance = 2.0;
  };
  /// Nearest stored point in the chordal metric (exact among stored reps).
  Hit nearest(const ProjPoint& q) const;
  std::size_t size() const { return pts_.size(); }

 private:
  int n_;
  double cell_;
  std::vector<std::pair<ProjPoint, int>> pts_;
  std::unordered_map<std::uint64_t, std::vector<int>> grid_;
  std::uint64_t key_of(const Vec& v, const std::vector<int>& offset) const;
  void collect(const Vec& v, int radius, std::vector<int>& out) const;
};

/// A finite sample of a limit set, deduplicated at a chordal tolerance on
/// insertion (grid-hash accelerated).
class PointCloud {
 public:
  explicit PointCloud(int n, double dedup_tol = 1e-6);

  int dim() const { return n_; }
  double dedup_tol() const { return tol_; }
  const std::vector<CloudPoint>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }

  /// Returns true if the point was new at the dedup tolerance.
  bool add(const CloudPoint& p);

  /// Index of some point within `tol` of q, or -1.
  int nearest_within(const ProjPoint& q, double tol) const;

  /// Chordal distance to the nearest cloud point (exhaustive).
  double nearest_distance(const ProjPoint& q) const;

  /// Greatest nearest-neighbor distance within the cloud; the sampling
  /// resolution of the cloud as an approximation of its limit set.
  double covering_spacing() const;

 private:
  std::vector<std::int64_t> key(const Vec& v, double shift) const;
  void insert_keys(std::size_t idx);
  std::vector<int> candidates(const Vec& v) const;

  int n_;
  double tol_;
  double cell_;
  std::vector<CloudPoint> pts_;
  std::unordered_map<std::uint64_t, std::vector<int>> grid_a_, grid_b_;
};

}  // namespace convexcore
