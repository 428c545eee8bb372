#include "convexcore/groups.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <unordered_map>

#include "convexcore/rng.hpp"

namespace convexcore {

// ---------------------------------------------------------------------------
// NNGrid

namespace {

std::uint64_t hash_int_key(const std::vector<std::int64_t>& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int64_t v : key) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace

NNGrid::NNGrid(int n, double cell) : n_(n), cell_(cell) {}

std::uint64_t NNGrid::key_of(const Vec& v, const std::vector<int>& offset) const {
  std::vector<std::int64_t> key(n_);
  for (int i = 0; i < n_; ++i)
    key[i] = static_cast<std::int64_t>(std::floor(v[i] / cell_)) + offset[i];
  return hash_int_key(key);
}

void NNGrid::insert(const ProjPoint& p, int payload) {
  pts_.emplace_back(p, payload);
  std::vector<int> zeros(n_, 0);
  grid_[key_of(p.rep(), zeros)].push_back(static_cast<int>(pts_.size()) - 1);
}

void NNGrid::insert_all(const std::vector<ProjPoint>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    insert(pts[i], static_cast<int>(i));
}

void NNGrid::collect(const Vec& v, int radius, std::vector<int>& out) const {
  // All cells of the L-inf shell at the given radius.
  std::vector<int> offset(n_, -radius);
  while (true) {
    bool on_shell = false;
    for (int i = 0; i < n_; ++i)
      if (offset[i] == -radius || offset[i] == radius) on_shell = true;
    if (on_shell || radius == 0) {
      auto it = grid_.find(key_of(v, offset));
      if (it != grid_.end())
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    int d = 0;
    while (d < n_ && ++offset[d] > radius) offset[d++] = -radius;
    if (d == n_) break;
  }
}

NNGrid::Hit NNGrid::nearest(const ProjPoint& q) const {
  Hit best;
  if (pts_.empty()) return best;
  std::vector<int> cand;
  // Expand L-inf shells. The chordal nearest point lies within Euclidean
  // sqrt(2) times the best chordal distance seen (small-angle relation on
  // unit representatives), so shells beyond that cannot improve.
  int radius = 0;
  const int hard_cap = static_cast<int>(2.5 / cell_) + 2;
  while (radius <= hard_cap) {
    cand.clear();
    collect(q.rep(), radius, cand);
    for (int c : cand) {
      double d = chordal_distance(pts_[c].first, q);
      if (d < best.distance) {
        best.distance = d;
        best.payload = pts_[c].second;
      }
    }
    if (best.payload >= 0 && (radius - 1) * cell_ >= 1.5 * best.distance) break;
    ++radius;
  }
  return best;
}

// ---------------------------------------------------------------------------
// PointCloud

PointCloud::PointCloud(int n, double dedup_tol)
    : n_(n), tol_(dedup_tol), cell_(std::max(dedup_tol, 1e-12)) {}

std::vector<std::int64_t> PointCloud::key(const Vec& v, double shift) const {
  std::vector<std::int64_t> k(n_);
  for (int i = 0; i < n_; ++i)
    k[i] = static_cast<std::int64_t>(std::llround(v[i] / cell_ + shift));
  return k;
}

namespace {

std::uint64_t fnv_hash(const std::vector<std::int64_t>& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int64_t v : key) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace

std::vector<int> PointCloud::candidates(const Vec& v) const {
  std::vector<int> out;
  auto gather = [&](const std::unordered_map<std::uint64_t, std::vector<int>>& g,
                    double shift) {
    auto it = g.find(fnv_hash(key(v, shift)));
    if (it != g.end())
      out.insert(out.end(), it->second.begin(), it->second.end());
  };
  gather(grid_a_, 0.0);
  gather(grid_b_, 0.5);
  return out;
}

void PointCloud::insert_keys(std::size_t idx) {
  const Vec& v = pts_[idx].point.rep();
  grid_a_[fnv_hash(key(v, 0.0))].push_back(static_cast<int>(idx));
  grid_b_[fnv_hash(key(v, 0.5))].push_back(static_cast<int>(idx));
}

bool PointCloud::add(const CloudPoint& p) {
  if (p.point.dim() != n_)
    throw Error(ErrorCode::DimensionMismatch, "cloud point dimension mismatch");
  for (int c : candidates(p.point.rep()))
    if (chordal_distance(pts_[c].point, p.point) <= tol_) return false;
  pts_.push_back(p);
  insert_keys(pts_.size() - 1);
  return true;
}

int PointCloud::nearest_within(const ProjPoint& q, double tol) const {
  if (tol <= cell_) {
    for (int c : candidates(q.rep()))
      if (chordal_distance(pts_[c].point, q) <= tol) return c;
    return -1;
  }
  int best = -1;
  double bd = tol;
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    double d = chordal_distance(pts_[i].point, q);
    if (d <= bd) {
      bd = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

double PointCloud::nearest_distance(const ProjPoint& q) const {
  double best = 2.0;
  for (const auto& p : pts_) best = std::min(best, chordal_distance(p.point, q));
  return best;
}

double PointCloud::covering_spacing() const {
  if (pts_.size() < 2) return 2.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    double nn = 2.0;
    for (std::size_t j = 0; j < pts_.size(); ++j) {
      if (i == j) continue;
      nn = std::min(nn, chordal_distance(pts_[i].point, pts_[j].point));
    }
    worst = std::max(worst, nn);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Word balls

std::vector<Generator> GroupSpec::alphabet() const {
  std::vector<Generator> out = generators;
  if (include_inverses) {
    for (const auto& g : generators)
      out.push_back({g.label + "'", g.matrix.inverse()});
  }
  return out;
}

namespace {

struct MatHasher {
  double cell;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid_a, grid_b;

  std::uint64_t hash_of(const Mat& m, double shift) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      auto v = static_cast<std::int64_t>(std::llround(m.data()[i] / cell + shift));
      for (int b = 0; b < 8; ++b) {
        h ^= static_cast<std::uint64_t>(v >> (8 * b)) & 0xff;
        h *= 1099511628211ull;
      }
    }
    return h;
  }

  std::vector<std::size_t> candidates(const Mat& m) const {
    std::vector<std::size_t> out;
    auto it = grid_a.find(hash_of(m, 0.0));
    if (it != grid_a.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    it = grid_b.find(hash_of(m, 0.5));
    if (it != grid_b.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    return out;
  }

  void insert(const Mat& m, std::size_t idx) {
    grid_a[hash_of(m, 0.0)].push_back(idx);
    grid_b[hash_of(m, 0.5)].push_back(idx);
  }
};

double entry_dist(const Mat& a, const Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

BallIndex word_ball(const GroupSpec& spec, int R, const Config& cfg, int jobs) {
  if (R < 0) throw Error(ErrorCode::BadParameters, "negative ball radius");
  BallIndex ball;
  ball.radius_ = R;
  const auto alpha = spec.alphabet();

  MatHasher hasher{cfg.dedup_cell, {}, {}};
  Mat id = canonical_mat(Mat::Identity(spec.n, spec.n), cfg);
  ball.elems_.push_back(GroupElement{{}, ProjMat::from_product(id, cfg)});
  hasher.insert(id, 0);
  ball.offsets_ = {0, 1};

  for (int r = 1; r <= R; ++r) {
    std::size_t lo = ball.offsets_[r - 1], hi = ball.offsets_[r];
    // Candidate products of the previous sphere by every letter, in a
    // fixed order so that enumeration is deterministic (and partitionable).
    std::vector<std::pair<std::vector<int>, Mat>> cand;
    cand.resize((hi - lo) * alpha.size());
    auto compute_chunk = [&](std::size_t begin, std::size_t end) {
      for (std::size_t t = begin; t < end; ++t) {
        std::size_t e = lo + t / alpha.size();
        int a = static_cast<int>(t % alpha.size());
        std::vector<int> w = ball.elems_[e].word;
        w.push_back(a);
        Mat m = canonical_mat(ball.elems_[e].matrix.mat() * alpha[a].matrix.mat(), cfg);
        cand[t] = {std::move(w), std::move(m)};
      }
    };
    if (jobs > 1) {
      std::vector<std::future<void>> fs;
      std::size_t total = cand.size();
      std::size_t chunk = (total + jobs - 1) / jobs;
      for (int k = 0; k < jobs; ++k) {
        std::size_t b = k * chunk, e = std::min(total, b + chunk);
        if (b >= e) break;
        fs.push_back(std::async(std::launch::async, compute_chunk, b, e));
      }
      for (auto& f : fs) f.get();
    } else {
      compute_chunk(0, cand.size());
    }

    for (auto& [w, m] : cand) {
      bool dup = false;
      for (std::size_t c : hasher.candidates(m)) {
        double d = entry_dist(m, ball.elems_[c].matrix.mat());
        if (d <= cfg.eps_mat) {
          dup = true;
          break;
        }
        if (d <= 10.0 * cfg.eps_mat)
          ball.collisions_.emplace_back(c, ball.elems_.size());
      }
      if (dup) continue;
      if (ball.elems_.size() >= cfg.ball_cap)
        throw Error(ErrorCode::BallTooLarge, "word ball exceeds the configured cap");
      hasher.insert(m, ball.elems_.size());
      ball.elems_.push_back(GroupElement{std::move(w), ProjMat::from_product(m, cfg)});
    }
    ball.offsets_.push_back(ball.elems_.size());
  }
  return ball;
}

std::size_t BallIndex::sphere_size(int r) const {
  auto [lo, hi] = sphere_range(r);
  return hi - lo;
}

std::pair<std::size_t, std::size_t> BallIndex::sphere_range(int r) const {
  if (r < 0 || r > radius_)
    throw Error(ErrorCode::BadParameters, "sphere radius out of range");
  return {offsets_[r], offsets_[r + 1]};
}

// ---------------------------------------------------------------------------
// Orbits and diagnostics

PointCloud orbit(const GroupSpec& spec, const BallIndex& ball,
                 const ConvexDomain& dom, const std::vector<ProjPoint>& seeds,
                 const Config& cfg) {
  (void)spec;
  for (const auto& s : seeds)
    if (dom.locate(s, cfg) != Location::Interior)
      throw Error(ErrorCode::NotInterior, "orbit seeds must be interior");
  PointCloud cloud(dom.dim(), cfg.cloud_dedup);
  for (const auto& e : ball.elements()) {
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

void check_invariance(const GroupSpec& spec, const ConvexDomain& dom,
                      const Config& cfg) {
  Rng rng(cfg.seed);
  const Chart& chart = dom.bounding_chart();
  Vec c0 = chart.to_chart(dom.interior_point().rep());
  const int n = dom.dim();
  std::vector<Vec> frontier;
  for (int k = 0; k < 16 * n; ++k)
    frontier.push_back(dom.frontier_point(c0, rng.unit_vec(n - 1), cfg));
  for (const auto& g : spec.alphabet()) {
    for (const auto& f : frontier) {
      double m = dom.margin(g.matrix.mat() * f);
      if (std::abs(m) > cfg.invariance_tol)
        throw Error(ErrorCode::DomainNotInvariant,
                    "generator " + g.label + " does not preserve the domain");
    }
  }
}

QiDefect qi_defect(const GroupSpec& spec, const BallIndex& ball,
                   const ConvexDomain& dom, const ProjPoint& z, const Config& cfg) {
  if (dom.locate(z, cfg) != Location::Interior)
    throw Error(ErrorCode::NotInterior, "qi_defect basepoint must be interior");
  check_invariance(spec, dom, cfg);
  QiDefect out;
  out.kappa_hat = -1e300;
  for (std::size_t i = 0; i < ball.elements().size(); ++i) {
    const auto& e = ball.elements()[i];
    ProjPoint gz = e.matrix.apply(z);
    if (dom.margin(gz.rep()) <= 0.0) {
      ++out.skipped_near_frontier;
      continue;
    }
    double d = chordal_distance(gz, z) < 1e-13 ? 0.0 : hilbert_distance(dom, z, gz, cfg);
    SpectralData s = spectral(e.matrix);
    double defect = 2.0 * d - s.mu_gap(1, dom.dim());
    if (defect > out.kappa_hat) {
      out.kappa_hat = defect;
      out.argmax = i;
    }
  }
  out.violations = 0;
  return out;
}

GapProfile gap_profile(const BallIndex& ball, int i, int j, const Config& cfg) {
  GapProfile prof;
  prof.i = i;
  prof.j = j;
  for (int r = 0; r <= ball.radius(); ++r) {
    auto [lo, hi] = ball.sphere_range(r);
    GapRadiusStats st;
    st.r = r;
    st.count = hi - lo;
    if (hi == lo) {
      prof.per_radius.push_back(st);
      continue;
    }
    double mn = 1e300, mx = -1e300, acc = 0.0;
    for (std::size_t k = lo; k < hi; ++k) {
      SpectralData s = spectral(ball.elements()[k].matrix);
      double g = s.mu_gap(i, j);
      mn = std::min(mn, g);
      mx = std::max(mx, g);
      acc += g;
    }
    st.min = mn;
    st.max = mx;
    st.mean = acc / static_cast<double>(hi - lo);
    prof.per_radius.push_back(st);
  }

  // Least-squares fit of min vs r over nonempty spheres with r >= 1.
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  int cnt = 0;
  for (const auto& st : prof.per_radius) {
    if (st.r < 1 || st.count == 0) continue;
    sx += st.r;
    sy += st.min;
    sxx += st.r * st.r;
    sxy += st.r * st.min;
    syy += st.min * st.min;
    ++cnt;
  }
  if (cnt >= 2) {
    double det = cnt * sxx - sx * sx;
    prof.slope = (cnt * sxy - sx * sy) / det;
    double inter = (sy - prof.slope * sx) / cnt;
    double ss_res = 0, ss_tot = 0, ybar = sy / cnt;
    for (const auto& st : prof.per_radius) {
      if (st.r < 1 || st.count == 0) continue;
      double fit = prof.slope * st.r + inter;
      ss_res += (st.min - fit) * (st.min - fit);
      ss_tot += (st.min - ybar) * (st.min - ybar);
    }
    prof.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  }

  // An empty sphere counts as gap-bounded: the ball saturated, so the
  // group cannot have divergent gaps.
  auto bounded_at = [&](const GapRadiusStats& st) {
    return st.count == 0 || st.min <= cfg.gap_max;
  };
  bool bounded_tail = false;
  for (std::size_t k = 0; k + 2 < prof.per_radius.size(); ++k) {
    if (prof.per_radius[k].r < 4) continue;
    if (bounded_at(prof.per_radius[k]) && bounded_at(prof.per_radius[k + 1]) &&
        bounded_at(prof.per_radius[k + 2])) {
      bounded_tail = true;
      break;
    }
  }
  if (bounded_tail)
    prof.verdict = GapVerdict::NotAnosov;
  else if (prof.slope > cfg.slope_min && prof.r2 > cfg.r2_floor)
    prof.verdict = GapVerdict::AnosovConsistent;
  else
    prof.verdict = GapVerdict::Inconclusive;
  return prof;
}

const char* gap_verdict_name(GapVerdict v) {
  switch (v) {
    case GapVerdict::AnosovConsistent: return "AnosovConsistent";
    case GapVerdict::NotAnosov: return "NotAnosov";
    case GapVerdict::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

}  // namespace convexcore
