#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "convexcore/domains.hpp"
#include "convexcore/groups.hpp"
#include "convexcore/limitsets.hpp"
#include "convexcore/pqgeom.hpp"

namespace convexcore {

struct SelfCheck {
  std::string name;
  double value = 0.0;  // residual or indicator
};

/// One of the paper-style worked examples, with its attached geometric
/// data and the checks it was validated against at construction.
struct ExampleDescriptor {
  std::string name;
  std::map<std::string, double> params;
  GroupSpec group;
  std::optional<ConvexDomain> domain;
  std::optional<PQForm> form;
  std::optional<VerdictKind> expected_verdict;
  std::vector<SelfCheck> checks;
  bool ping_pong_certified = false;
};

/// Z^{n-1} of diagonal matrices with power-of-t entries, dividing the
/// coordinate simplex.
ExampleDescriptor diagonal_torus(int n, double t,
                                 const Config& cfg = default_config());

/// Affine Coxeter generators: the coordinate swaps s_1..s_{n-1} and the
/// scaled swap of e_1, e_n.
ExampleDescriptor coxeter_an(int n, double t,
                             const Config& cfg = default_config());

/// The four cyclic examples: (a) distinct positive eigenvalues,
/// (b) repeated bottom eigenvalue, (c) unipotent block, (d) rotation block.
ExampleDescriptor cyclic_example(char kind, double a, double b, double c_or_t,
                                 double theta = 0.0,
                                 const Config& cfg = default_config());

/// Free rank-2 Fuchsian group: symmetric squares of diag(s,1/s) and its
/// rotation by theta, transported to the standard Klein disk.
ExampleDescriptor schottky_so21(double s, double theta,
                                const Config& cfg = default_config());

/// Induced action of a 2x2 matrix on degree-(n-1) monomials x^{n-1-k} y^k.
Mat tau_n(const Eigen::Matrix2d& g, int n);

/// The invariant symmetric bilinear form of tau_n (n odd), derived from
/// the invariance equations and scaled so that B(x^{n-1}, y^{n-1}) = -1.
PQForm bn_form(int n, const Config& cfg = default_config());

struct LiftedGenerator {
  std::string label;
  Mat lift;
};

/// Block inclusion diag(g, I_{n'}) acting trivially on the second factor.
/// Inclusion is only a homomorphism for a genuine linear lift, so the
/// generators are lifted to |det| = 1 before embedding.
GroupSpec block_include(const GroupSpec& g, int nprime,
                        const Config& cfg = default_config());
/// Same with caller-chosen lifts (e.g. the cone-preserving one).
GroupSpec block_include_lifted(const std::vector<LiftedGenerator>& lifted,
                               int nprime, const Config& cfg = default_config());

/// |det| = 1 representative of a PGL element, keeping the canonical sign.
Mat sl_lift(const Mat& m);

/// Coordinate embedding R^{m,1} -> R^{p,q} (positive block first, the
/// negative coordinate to the last slot).
Mat hpq_embed_point(int m, int p, int q);
Mat hpq_embed_element(const Mat& g, int m, int p, int q);

/// Bent group: generators [[gamma, u(gamma)], [0, I]]; the matrices of
/// `lifted` are used verbatim as the chosen lifts.
GroupSpec bend(const std::vector<LiftedGenerator>& lifted,
               const std::vector<Mat>& u, const Config& cfg = default_config());

/// Cocycle extension of u to a word in the lifted alphabet (letters >=
/// number of generators denote inverses).
Mat bend_cocycle_of_word(const std::vector<LiftedGenerator>& lifted,
                         const std::vector<Mat>& u, const std::vector<int>& word);

/// Product of lift letters for the same word encoding.
Mat lift_word_product(const std::vector<LiftedGenerator>& lifted,
                      const std::vector<int>& word);

std::vector<std::string> gallery_names();
ExampleDescriptor gallery_build(const std::string& name,
                                const std::map<std::string, double>& params,
                                const Config& cfg = default_config());

}  // namespace convexcore
