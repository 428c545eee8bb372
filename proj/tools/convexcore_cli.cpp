// Command-line harness: reproducible experiments over the library, with
// JSON reports, CSV clouds, and SVG charts for n = 3.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "convexcore/json_io.hpp"
#include "convexcore/rng.hpp"

using namespace convexcore;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitGeometry = 3;
constexpr int kExitResource = 4;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string orbit_svg(const ConvexDomain& dom, const PointCloud& cloud,
                      const Config& cfg) {
  const Chart& chart = dom.bounding_chart();
  Vec c0 = chart.to_chart(dom.interior_point().rep());
  std::ostringstream os;
  os.precision(6);
  std::vector<Vec> frontier;
  for (int k = 0; k <= 256; ++k) {
    double th = 2 * M_PI * k / 256;
    Vec d(2);
    d << std::cos(th), std::sin(th);
    frontier.push_back(chart.to_chart(dom.frontier_point(c0, d, cfg)));
  }
  double lo = 1e300, hi = -1e300;
  for (const auto& f : frontier) {
    lo = std::min({lo, f[0], f[1]});
    hi = std::max({hi, f[0], f[1]});
  }
  double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
  double scale = 600.0 / (hi - lo);
  auto px = [&](double x) { return (x - lo) * scale; };
  auto py = [&](double y) { return 600.0 - (y - lo) * scale; };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
        "viewBox=\"0 0 600 600\">\n";
  os << "<polygon points=\"";
  for (const auto& f : frontier) os << px(f[0]) << "," << py(f[1]) << " ";
  os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#8c564b", "#e377c2"};
  for (const auto& p : cloud.points()) {
    Vec c;
    try {
      c = chart.to_chart(p.point.rep());
    } catch (const Error&) {
      continue;  // point at chart infinity
    }
    const char* color =
        colors[p.seed_index >= 0 ? p.seed_index % 6 : 0];
    os << "<circle cx=\"" << px(c[0]) << "\" cy=\"" << py(c[1])
       << "\" r=\"2\" fill=\"" << color << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<ProjPoint> make_seeds(const ConvexDomain& dom, int count,
                                  const Config& cfg) {
  std::vector<ProjPoint> seeds{dom.interior_point()};
  Rng rng(cfg.seed);
  const Chart& chart = dom.bounding_chart();
  Vec c0 = chart.to_chart(dom.interior_point().rep());
  while (static_cast<int>(seeds.size()) < count) {
    Vec c = c0 + 0.25 * rng.gaussian_vec(dom.dim() - 1);
    ProjPoint cand(chart.from_chart(c), cfg);
    if (dom.locate(cand, cfg) == Location::Interior) seeds.push_back(cand);
  }
  seeds.resize(count);
  return seeds;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, double> out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::ParseError, "expected key=value, got " + kv);
    out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convexcore: Hilbert geometry and convex cocompactness diagnostics"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--seed", cfg.seed, "RNG seed (CONVEXCORE_SEED overrides)");
  app.add_option("--segment-eps", cfg.segment_eps, "segment detector resolution");
  app.add_option("--gap-max", cfg.gap_max, "NotAnosov sphere-min bound");
  app.add_option("--slope-min", cfg.slope_min, "AnosovConsistent slope floor");
  int jobs = 1;
  app.add_option("--jobs", jobs, "parallel ball enumeration partitions");

  // gallery
  auto* cmd_gallery = app.add_subcommand("gallery", "list or emit worked examples");
  auto* gal_list = cmd_gallery->add_subcommand("list", "list example names");
  auto* gal_emit = cmd_gallery->add_subcommand("emit", "emit an example as JSON");
  std::string gal_name, gal_out;
  std::vector<std::string> gal_params;
  gal_emit->add_option("name", gal_name, "example name")->required();
  gal_emit->add_option("--params", gal_params, "key=value parameters");
  gal_emit->add_option("--out", gal_out, "output path (default stdout)");

  // orbit
  auto* cmd_orbit = app.add_subcommand("orbit", "orbit cloud of a group on a domain");
  std::string orb_group, orb_domain, orb_out, orb_svg;
  int orb_radius = 6, orb_seeds = 1;
  cmd_orbit->add_option("--group", orb_group, "group spec JSON")->required();
  cmd_orbit->add_option("--domain", orb_domain, "domain JSON")->required();
  cmd_orbit->add_option("--radius", orb_radius, "word-length radius");
  cmd_orbit->add_option("--seeds", orb_seeds, "number of interior seeds");
  cmd_orbit->add_option("--out", orb_out, "CSV output path");
  cmd_orbit->add_option("--svg", orb_svg, "SVG chart output (n = 3 only)");

  // limitset
  auto* cmd_limitset = app.add_subcommand("limitset", "limit-set cloud export");
  std::string ls_group, ls_domain, ls_out, ls_kind = "proximal";
  int ls_radius = 6, ls_seeds = 3;
  cmd_limitset->add_option("--group", ls_group)->required();
  cmd_limitset->add_option("--domain", ls_domain, "needed for kind=orbital");
  cmd_limitset->add_option("--kind", ls_kind, "proximal or orbital");
  cmd_limitset->add_option("--radius", ls_radius);
  cmd_limitset->add_option("--seeds", ls_seeds);
  cmd_limitset->add_option("--out", ls_out, "CSV output path");

  // diagnose
  auto* cmd_diagnose = app.add_subcommand("diagnose", "full diagnostic report");
  std::string di_group, di_domain, di_out;
  int di_radius = 8;
  cmd_diagnose->add_option("--group", di_group)->required();
  cmd_diagnose->add_option("--domain", di_domain, "optional invariant domain");
  cmd_diagnose->add_option("--radius", di_radius);
  cmd_diagnose->add_option("--out", di_out, "report path (default stdout)");

  // dual
  auto* cmd_dual = app.add_subcommand("dual", "dual domain");
  std::string du_domain, du_out;
  int du_samples = 256;
  cmd_dual->add_option("--domain", du_domain)->required();
  cmd_dual->add_option("--samples", du_samples);
  cmd_dual->add_option("--out", du_out);

  // signature
  auto* cmd_signature = app.add_subcommand("signature", "signature of B_n");
  int sig_n = 3;
  std::string sig_out;
  cmd_signature->add_option("--n", sig_n)->required();
  cmd_signature->add_option("--out", sig_out);

  // negativity
  auto* cmd_negativity = app.add_subcommand("negativity", "limit-set negativity");
  std::string ng_form, ng_cloud, ng_out;
  cmd_negativity->add_option("--form", ng_form)->required();
  cmd_negativity->add_option("--cloud", ng_cloud, "cloud CSV")->required();
  cmd_negativity->add_option("--out", ng_out);

  // flatten
  auto* cmd_flatten = app.add_subcommand("flatten", "sphere flattening f_t");
  std::string fl_form, fl_point, fl_out;
  double fl_t = 1.0;
  cmd_flatten->add_option("--form", fl_form)->required();
  cmd_flatten->add_option("--point", fl_point, "comma-separated coordinates")->required();
  cmd_flatten->add_option("--t", fl_t);
  cmd_flatten->add_option("--out", fl_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  if (const char* env = std::getenv("CONVEXCORE_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (...) {
      std::cerr << "invalid CONVEXCORE_SEED\n";
      return kExitInput;
    }
  }

  try {
    if (gal_list->parsed()) {
      for (const auto& name : gallery_names()) std::cout << name << "\n";
      return kExitOk;
    }
    if (gal_emit->parsed()) {
      ExampleDescriptor ex = gallery_build(gal_name, parse_params(gal_params), cfg);
      Json out = descriptor_to_json(ex);
      out["run_config"] = config_to_json(cfg);
      write_text(gal_out, dump(out));
      return kExitOk;
    }
    if (cmd_orbit->parsed()) {
      GroupSpec g = group_from_json(read_json_file(orb_group), cfg);
      ConvexDomain dom = domain_from_json(read_json_file(orb_domain), cfg);
      BallIndex ball = word_ball(g, orb_radius, cfg, jobs);
      PointCloud cloud = orbit(g, ball, dom, make_seeds(dom, orb_seeds, cfg), cfg);
      write_text(orb_out, cloud_to_csv(cloud));
      if (!orb_svg.empty()) {
        if (dom.dim() != 3)
          std::cerr << "svg output is only drawn for n = 3; skipped\n";
        else
          write_text(orb_svg, orbit_svg(dom, cloud, cfg));
      }
      return kExitOk;
    }
    if (cmd_limitset->parsed()) {
      GroupSpec g = group_from_json(read_json_file(ls_group), cfg);
      BallIndex ball = word_ball(g, ls_radius, cfg, jobs);
      PointCloud cloud(g.n, cfg.cloud_dedup);
      if (ls_kind == "proximal") {
        cloud = proximal_limit_set(ball, g.n, cfg.tau_proximal, cfg);
      } else if (ls_kind == "orbital") {
        if (ls_domain.empty())
          throw Error(ErrorCode::ParseError, "orbital limit set needs --domain");
        ConvexDomain dom = domain_from_json(read_json_file(ls_domain), cfg);
        cloud = orbital_limit_set(ball, dom, make_seeds(dom, ls_seeds, cfg),
                                  std::max(0, ls_radius - 2), ls_radius, cfg);
      } else {
        throw Error(ErrorCode::ParseError, "kind must be proximal or orbital");
      }
      write_text(ls_out, cloud_to_csv(cloud));
      return kExitOk;
    }
    if (cmd_diagnose->parsed()) {
      GroupSpec g = group_from_json(read_json_file(di_group), cfg);
      std::optional<ConvexDomain> dom;
      if (!di_domain.empty())
        dom = domain_from_json(read_json_file(di_domain), cfg);
      Verdict v = verdict(g, dom, di_radius, cfg);
      Json report = verdict_to_json(v);
      if (dom) {
        try {
          ProjPoint z = dom->interior_point();
          BallIndex ball = word_ball(g, di_radius, cfg, jobs);
          QiDefect qd = qi_defect(g, ball, *dom, z, cfg);
          report["qi_defect"] = {{"kappa_hat", qd.kappa_hat},
                                 {"violations", qd.violations}};
        } catch (const Error& e) {
          report["qi_defect"] = {{"error", e.what()}};
        }
      }
      report["run_config"] = config_to_json(cfg);
      write_text(di_out, dump(report));
      return kExitOk;
    }
    if (cmd_dual->parsed()) {
      ConvexDomain dom = domain_from_json(read_json_file(du_domain), cfg);
      ConvexDomain dual = dual_domain(dom, du_samples, cfg);
      Json out = domain_to_json(dual);
      out["run_config"] = config_to_json(cfg);
      write_text(du_out, dump(out));
      return kExitOk;
    }
    if (cmd_signature->parsed()) {
      PQForm f = bn_form(sig_n, cfg);
      Json out;
      out["n"] = sig_n;
      out["k"] = f.p();
      out["l"] = f.q();
      write_text(sig_out, dump(out));
      return kExitOk;
    }
    if (cmd_negativity->parsed()) {
      PQForm f = form_from_json(read_json_file(ng_form), cfg);
      PointCloud cloud = cloud_from_csv(read_text_file(ng_cloud), cfg);
      NegativityResult res = negativity(f, cloud, cfg);
      Json out;
      out["verdict"] = negativity_name(res.verdict);
      out["lift_test"] = negativity_name(res.lift_test);
      out["triple_test"] = negativity_name(res.triple_test);
      out["triples_checked"] = res.triples_checked;
      out["run_config"] = config_to_json(cfg);
      write_text(ng_out, dump(out));
      return kExitOk;
    }
    if (cmd_flatten->parsed()) {
      PQForm f = form_from_json(read_json_file(fl_form), cfg);
      std::vector<double> coords;
      std::istringstream ps(fl_point);
      std::string cell;
      while (std::getline(ps, cell, ',')) coords.push_back(std::stod(cell));
      Vec x(coords.size());
      for (std::size_t i = 0; i < coords.size(); ++i) x[i] = coords[i];
      ProjPoint image = sphere_flatten(f, ProjPoint(x, cfg), fl_t, cfg);
      Json out;
      out["t"] = fl_t;
      Json img = Json::array();
      for (Eigen::Index i = 0; i < image.rep().size(); ++i)
        img.push_back(image.rep()[i]);
      out["image"] = img;
      out["run_config"] = config_to_json(cfg);
      write_text(fl_out, dump(out));
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << error_name(e.code()) << ": " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::BadParameters:
      case ErrorCode::BadDimension:
        return kExitInput;
      case ErrorCode::BallTooLarge:
        return kExitResource;
      default:
        return kExitGeometry;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGeometry;
  }
  return kExitInput;
}
