#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "convexcore/json_io.hpp"

namespace py = pybind11;
using namespace convexcore;

namespace {

GroupSpec group_from_json_str(const std::string& text, const Config& cfg) {
  return group_from_json(Json::parse(text), cfg);
}

ConvexDomain domain_from_json_str(const std::string& text, const Config& cfg) {
  return domain_from_json(Json::parse(text), cfg);
}

Mat cloud_matrix(const PointCloud& cloud) {
  Mat out(cloud.size(), cloud.dim());
  for (std::size_t i = 0; i < cloud.size(); ++i)
    out.row(static_cast<Eigen::Index>(i)) = cloud.points()[i].point.rep();
  return out;
}

}  // namespace

PYBIND11_MODULE(_convexcore, m) {
  m.doc() = "Hilbert geometry, spectral projections, and convex cocompactness "
            "diagnostics for discrete subgroups of PGL(n,R)";

  py::register_exception<Error>(m, "ConvexCoreError");

  py::class_<Config>(m, "Config")
      .def(py::init<>())
      .def_readwrite("seed", &Config::seed)
      .def_readwrite("segment_eps", &Config::segment_eps)
      .def_readwrite("gap_max", &Config::gap_max)
      .def_readwrite("slope_min", &Config::slope_min)
      .def_readwrite("tau_proximal", &Config::tau_proximal)
      .def_readwrite("cloud_dedup", &Config::cloud_dedup);

  py::class_<ProjPoint>(m, "ProjPoint")
      .def(py::init([](const Vec& v) { return ProjPoint(v); }))
      .def_property_readonly("rep", &ProjPoint::rep)
      .def("__repr__", [](const ProjPoint& p) {
        std::ostringstream os;
        os << "ProjPoint(" << p.rep().transpose() << ")";
        return os.str();
      });

  py::class_<ProjHyperplane>(m, "ProjHyperplane")
      .def(py::init([](const Vec& v) { return ProjHyperplane(v); }))
      .def_property_readonly("covector", &ProjHyperplane::covector);

  py::class_<ProjMat>(m, "ProjMat")
      .def(py::init([](const Mat& m_) { return ProjMat(m_); }))
      .def_property_readonly("mat", &ProjMat::mat)
      .def("apply", [](const ProjMat& g, const ProjPoint& p) { return g.apply(p); })
      .def("inverse", [](const ProjMat& g) { return g.inverse(); });

  py::class_<SpectralData>(m, "SpectralData")
      .def_readonly("mu", &SpectralData::mu)
      .def_readonly("lam", &SpectralData::lambda)
      .def("mu_gap", &SpectralData::mu_gap)
      .def("lambda_gap", &SpectralData::lambda_gap);

  m.def("normalize_point", [](const Vec& v) { return normalize_point(v); });
  m.def("chordal_distance",
        [](const ProjPoint& p, const ProjPoint& q) { return chordal_distance(p, q); });
  m.def("cross_ratio", [](const ProjPoint& a, const ProjPoint& y, const ProjPoint& z,
                          const ProjPoint& b) {
    ExtReal r = cross_ratio(a, y, z, b);
    return r.infinite ? std::numeric_limits<double>::infinity() : r.value;
  });
  m.def("spectral", [](const ProjMat& g) { return spectral(g); });
  m.def("spectral_of", [](const Mat& g) { return spectral_of(g); });
  m.def("is_proximal", [](const ProjMat& g, double tau) { return is_proximal(g, tau); },
        py::arg("g"), py::arg("tau") = 1e-8);
  m.def("is_proximal_dual",
        [](const ProjMat& g, double tau) { return is_proximal_dual(g, tau); },
        py::arg("g"), py::arg("tau") = 1e-8);
  m.def("attracting_fixed_point",
        [](const ProjMat& g) { return attracting_fixed_point(g); });

  py::enum_<Location>(m, "Location")
      .value("Interior", Location::Interior)
      .value("Boundary", Location::Boundary)
      .value("Exterior", Location::Exterior);

  py::class_<ConvexDomain>(m, "ConvexDomain")
      .def_static("halfspace",
                  [](const std::vector<Vec>& walls) {
                    return ConvexDomain::halfspace(walls);
                  })
      .def_static("klein", [](int p) { return ConvexDomain::klein(p); })
      .def_static("hull",
                  [](const std::vector<Vec>& pts) { return ConvexDomain::hull(pts); })
      .def_static("from_json", &domain_from_json_str, py::arg("text"),
                  py::arg("cfg") = default_config())
      .def_property_readonly("dim", &ConvexDomain::dim)
      .def_property_readonly("interior_point", &ConvexDomain::interior_point)
      .def("locate",
           [](const ConvexDomain& d, const ProjPoint& p) { return d.locate(p); })
      .def("to_json", [](const ConvexDomain& d) { return domain_to_json(d).dump(); });

  m.def("contains", [](const ConvexDomain& d, const ProjPoint& p) {
    return contains(d, p);
  });
  m.def("hilbert_distance",
        [](const ConvexDomain& d, const ProjPoint& y, const ProjPoint& z) {
          return hilbert_distance(d, y, z);
        });
  m.def("dual_domain",
        [](const ConvexDomain& d, int samples) { return dual_domain(d, samples); },
        py::arg("domain"), py::arg("samples") = 256);
  m.def("delta_point", [](const ConvexDomain& d, const ProjPoint& y,
                          const ProjPoint& z) { return delta_pseudo(d, y, z); });
  m.def("delta_hyperplane", [](const ConvexDomain& d, const ProjPoint& y,
                               const ProjHyperplane& h) {
    return delta_pseudo(d, y, h);
  });
  m.def("center_of_mass", [](const ConvexDomain& d) { return center_of_mass(d); });

  py::class_<Generator>(m, "Generator")
      .def_readonly("label", &Generator::label)
      .def_readonly("matrix", &Generator::matrix);

  py::class_<GroupSpec>(m, "GroupSpec")
      .def(py::init([](int n, const std::vector<std::pair<std::string, Mat>>& gens,
                       bool inverses) {
             GroupSpec g;
             g.n = n;
             g.include_inverses = inverses;
             for (const auto& [label, mat] : gens)
               g.generators.push_back({label, ProjMat(mat)});
             return g;
           }),
           py::arg("n"), py::arg("generators"), py::arg("include_inverses") = true)
      .def_static("from_json", &group_from_json_str, py::arg("text"),
                  py::arg("cfg") = default_config())
      .def_readonly("n", &GroupSpec::n)
      .def_readonly("generators", &GroupSpec::generators)
      .def("to_json", [](const GroupSpec& g) { return group_to_json(g).dump(); });

  py::class_<BallIndex>(m, "BallIndex")
      .def_property_readonly("size", &BallIndex::ball_size)
      .def("sphere_size", &BallIndex::sphere_size)
      .def_property_readonly("radius", &BallIndex::radius);

  m.def("word_ball",
        [](const GroupSpec& g, int R, const Config& cfg) {
          return word_ball(g, R, cfg);
        },
        py::arg("group"), py::arg("radius"), py::arg("cfg") = default_config());

  py::class_<PointCloud>(m, "PointCloud")
      .def_property_readonly("size", &PointCloud::size)
      .def_property_readonly("matrix", &cloud_matrix)
      .def("to_csv", [](const PointCloud& c) { return cloud_to_csv(c); });

  m.def("orbit",
        [](const GroupSpec& g, const BallIndex& ball, const ConvexDomain& dom,
           const std::vector<ProjPoint>& seeds, const Config& cfg) {
          return orbit(g, ball, dom, seeds, cfg);
        },
        py::arg("group"), py::arg("ball"), py::arg("domain"), py::arg("seeds"),
        py::arg("cfg") = default_config());
  m.def("proximal_limit_set",
        [](const BallIndex& ball, int n, double tau) {
          return proximal_limit_set(ball, n, tau);
        },
        py::arg("ball"), py::arg("n"), py::arg("tau") = 1e-8);
  m.def("orbital_limit_set",
        [](const BallIndex& ball, const ConvexDomain& dom,
           const std::vector<ProjPoint>& seeds, int lo, int hi) {
          return orbital_limit_set(ball, dom, seeds, lo, hi);
        });

  py::class_<QiDefect>(m, "QiDefect")
      .def_readonly("kappa_hat", &QiDefect::kappa_hat)
      .def_readonly("violations", &QiDefect::violations);

  m.def("qi_defect", [](const GroupSpec& g, const BallIndex& ball,
                        const ConvexDomain& dom, const ProjPoint& z) {
    return qi_defect(g, ball, dom, z);
  });

  py::enum_<GapVerdict>(m, "GapVerdict")
      .value("AnosovConsistent", GapVerdict::AnosovConsistent)
      .value("NotAnosov", GapVerdict::NotAnosov)
      .value("Inconclusive", GapVerdict::Inconclusive);

  py::class_<GapProfile>(m, "GapProfile")
      .def_readonly("slope", &GapProfile::slope)
      .def_readonly("r2", &GapProfile::r2)
      .def_readonly("verdict", &GapProfile::verdict);

  m.def("gap_profile",
        [](const BallIndex& ball, int i, int j, const Config& cfg) {
          return gap_profile(ball, i, j, cfg);
        },
        py::arg("ball"), py::arg("i") = 1, py::arg("j") = 2,
        py::arg("cfg") = default_config());

  m.def("detect_segments", [](const PointCloud& cloud, const ConvexDomain& dom,
                              double eps, int k) {
    auto hits = detect_segments(cloud, dom, eps, k);
    std::vector<std::pair<int, int>> out;
    for (const auto& h : hits) out.emplace_back(h.i, h.j);
    return out;
  }, py::arg("cloud"), py::arg("domain"), py::arg("eps") = 1e-2, py::arg("k") = 16);
  m.def("detect_pets", [](const PointCloud& cloud, const ConvexDomain& dom,
                          double eps) {
    auto hits = detect_pets(cloud, dom, eps);
    std::vector<std::tuple<int, int, int>> out;
    for (const auto& h : hits) out.emplace_back(h.i, h.j, h.k);
    return out;
  }, py::arg("cloud"), py::arg("domain"), py::arg("eps") = 1e-2);

  py::enum_<VerdictKind>(m, "VerdictKind")
      .value("StronglyCCConsistent", VerdictKind::StronglyCCConsistent)
      .value("NonHyperbolicCCConsistent", VerdictKind::NonHyperbolicCCConsistent)
      .value("NoInvariantConvexSetFound", VerdictKind::NoInvariantConvexSetFound)
      .value("Inconclusive", VerdictKind::Inconclusive);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("kind", &Verdict::kind)
      .def_readonly("epsilon_used", &Verdict::epsilon_used)
      .def_readonly("notes", &Verdict::notes)
      .def("to_json", [](const Verdict& v) { return verdict_to_json(v).dump(2); });

  m.def("verdict",
        [](const GroupSpec& g, std::optional<ConvexDomain> dom, int R,
           const Config& cfg) { return verdict(g, dom, R, cfg); },
        py::arg("group"), py::arg("domain") = std::nullopt, py::arg("radius") = 8,
        py::arg("cfg") = default_config());

  py::enum_<PQClass>(m, "PQClass")
      .value("Hpq", PQClass::Hpq)
      .value("Boundary", PQClass::Boundary)
      .value("Spq", PQClass::Spq);

  py::class_<PQForm>(m, "PQForm")
      .def_static("standard", &PQForm::standard)
      .def_static("from_gram",
                  [](const Mat& g) { return PQForm::from_gram(g); })
      .def_property_readonly("p", &PQForm::p)
      .def_property_readonly("q", &PQForm::q)
      .def_property_readonly("gram", &PQForm::gram);

  m.def("classify", [](const PQForm& f, const ProjPoint& x) { return classify(f, x); });
  py::enum_<NegativityVerdict>(m, "NegativityVerdict")
      .value("Negative", NegativityVerdict::Negative)
      .value("Positive", NegativityVerdict::Positive)
      .value("Neither", NegativityVerdict::Neither)
      .value("Inconclusive", NegativityVerdict::Inconclusive);
  py::class_<NegativityResult>(m, "NegativityResult")
      .def_readonly("verdict", &NegativityResult::verdict)
      .def_readonly("lift_test", &NegativityResult::lift_test)
      .def_readonly("triple_test", &NegativityResult::triple_test);
  m.def("negativity",
        [](const PQForm& f, const PointCloud& cloud) { return negativity(f, cloud); });
  m.def("sphere_flatten", [](const PQForm& f, const ProjPoint& x, double t) {
    return sphere_flatten(f, x, t);
  });
  m.def("pq_dual", [](const PQForm& f, const ProjPoint& x) { return pq_dual(f, x); });

  py::class_<ExampleDescriptor>(m, "ExampleDescriptor")
      .def_readonly("name", &ExampleDescriptor::name)
      .def_readonly("group", &ExampleDescriptor::group)
      .def_property_readonly("domain",
                             [](const ExampleDescriptor& e) { return e.domain; })
      .def_readonly("expected_verdict", &ExampleDescriptor::expected_verdict)
      .def_readonly("ping_pong_certified", &ExampleDescriptor::ping_pong_certified)
      .def("to_json",
           [](const ExampleDescriptor& e) { return descriptor_to_json(e).dump(2); });

  m.def("gallery_names", &gallery_names);
  m.def("gallery_build",
        [](const std::string& name, const std::map<std::string, double>& params,
           const Config& cfg) { return gallery_build(name, params, cfg); },
        py::arg("name"), py::arg("params") = std::map<std::string, double>{},
        py::arg("cfg") = default_config());
  m.def("tau_n", [](const Eigen::Matrix2d& g, int n) { return tau_n(g, n); });
  m.def("bn_form", [](int n) { return bn_form(n); });
  m.def("bn_signature", [](int n) {
    PQForm f = bn_form(n);
    return std::make_pair(f.p(), f.q());
  });
  m.def("block_include", [](const GroupSpec& g, int nprime) {
    return block_include(g, nprime);
  });
}
