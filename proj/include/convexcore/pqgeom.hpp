#pragma once

#include <utility>
#include <vector>

#include "convexcore/cloud.hpp"
#include "convexcore/projlin.hpp"

namespace convexcore {

/// A nondegenerate symmetric bilinear form of signature (p,q).
class PQForm {
 public:
  static PQForm standard(int p, int q);
  /// Signature is computed from the eigenvalues; degenerate Grams are
  /// rejected.
  static PQForm from_gram(const Mat& gram, const Config& cfg = default_config());

  int p() const { return p_; }
  int q() const { return q_; }
  int dim() const { return p_ + q_; }
  const Mat& gram() const { return gram_; }
  bool is_standard() const { return standard_; }

  double eval(const Vec& x, const Vec& y) const { return x.dot(gram_ * y); }
  double eval(const Vec& x) const { return eval(x, x); }

 private:
  PQForm() = default;
  int p_ = 0, q_ = 0;
  Mat gram_;
  bool standard_ = false;
};

enum class PQClass { Hpq, Boundary, Spq };

PQClass classify(const PQForm& F, const ProjPoint& x,
                 const Config& cfg = default_config());

struct TransversalityResult {
  bool transverse = true;
  std::vector<std::pair<int, int>> failures;  // cloud index pairs on each other's perp
};

TransversalityResult is_transverse(const PQForm& F, const PointCloud& cloud,
                                   const Config& cfg = default_config());

enum class NegativityVerdict { Negative, Positive, Neither, Inconclusive };

const char* negativity_name(NegativityVerdict v);

struct NegativityResult {
  NegativityVerdict verdict = NegativityVerdict::Inconclusive;
  NegativityVerdict lift_test = NegativityVerdict::Neither;    // greedy sign lift
  NegativityVerdict triple_test = NegativityVerdict::Neither;  // Gram signatures
  std::size_t triples_checked = 0;
};

/// Two independent tests (consistent sign lift; 3x3 Gram signatures on
/// random triples); the verdict requires agreement.
NegativityResult negativity(const PQForm& F, const PointCloud& cloud,
                            const Config& cfg = default_config());

/// The flattening f_t in standard coordinates: scales the middle negative
/// coordinates by sqrt(1-t) and corrects the last one so null vectors stay
/// null; f_1 lands on the standard sphere x_1^2+...+x_p^2 = x_{p+q}^2.
ProjPoint sphere_flatten(const PQForm& F, const ProjPoint& x, double t,
                         const Config& cfg = default_config());

/// x -> <x, .>_{p,q}, the form-duality map.
ProjHyperplane pq_dual(const PQForm& F, const ProjPoint& x,
                       const Config& cfg = default_config());
/// Inverse through the inverse Gram.
ProjPoint pq_dual_inv(const PQForm& F, const ProjHyperplane& h,
                      const Config& cfg = default_config());

}  // namespace convexcore
