#include "convexcore/json_io.hpp"

#include <set>
#include <sstream>

namespace convexcore {

namespace {

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw Error(ErrorCode::ParseError, "expected a nonempty numeric array");
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw Error(ErrorCode::ParseError, "expected a number");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

Json mat_to_json(const Mat& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw Error(ErrorCode::ParseError, "expected a matrix as an array of rows");
  Vec first = vec_from_json(j[0]);
  Mat m(j.size(), first.size());
  m.row(0) = first;
  for (std::size_t i = 1; i < j.size(); ++i) {
    Vec row = vec_from_json(j[i]);
    if (row.size() != first.size())
      throw Error(ErrorCode::ParseError, "ragged matrix rows");
    m.row(static_cast<Eigen::Index>(i)) = row;
  }
  return m;
}

}  // namespace

Json group_to_json(const GroupSpec& g) {
  Json out;
  out["n"] = g.n;
  out["include_inverses"] = g.include_inverses;
  Json gens = Json::array();
  for (const auto& gen : g.generators)
    gens.push_back({{"label", gen.label}, {"matrix", mat_to_json(gen.matrix.mat())}});
  out["generators"] = gens;
  return out;
}

GroupSpec group_from_json(const Json& j, const Config& cfg) {
  if (!j.contains("n") || !j.contains("generators"))
    throw Error(ErrorCode::ParseError, "group spec needs 'n' and 'generators'");
  GroupSpec g;
  g.n = j.at("n").get<int>();
  g.include_inverses = j.value("include_inverses", true);
  for (const auto& gen : j.at("generators")) {
    Mat m = mat_from_json(gen.at("matrix"));
    if (m.rows() != g.n || m.cols() != g.n)
      throw Error(ErrorCode::ParseError, "generator matrix has wrong dimension");
    g.generators.push_back({gen.value("label", std::string("g")), ProjMat(m, cfg)});
  }
  if (g.generators.empty())
    throw Error(ErrorCode::ParseError, "group spec needs at least one generator");
  std::set<std::string> labels;
  for (const auto& gen : g.generators)
    if (!labels.insert(gen.label).second)
      throw Error(ErrorCode::ParseError, "generator labels must be unique");
  return g;
}

Json domain_to_json(const ConvexDomain& d) {
  Json out;
  switch (d.kind()) {
    case DomainKind::Halfspace: {
      out["type"] = "halfspace";
      Json data = Json::array();
      for (const auto& w : d.walls()) data.push_back(vec_to_json(w));
      out["data"] = data;
      break;
    }
    case DomainKind::Klein: {
      out["type"] = "klein";
      out["data"] = Json::array({Json::array({d.klein_p()})});
      break;
    }
    case DomainKind::Hull: {
      out["type"] = "hull";
      Json data = Json::array();
      for (const auto& v : d.vertices()) data.push_back(vec_to_json(v));
      out["data"] = data;
      out["chart"] = vec_to_json(d.bounding_chart().ell);
      break;
    }
  }
  out["interior_point"] = vec_to_json(d.interior_point().rep());
  return out;
}

ConvexDomain domain_from_json(const Json& j, const Config& cfg) {
  std::string type = j.value("type", "");
  if (type == "klein") {
    const Json& data = j.at("data");
    int p = data[0][0].get<int>();
    return ConvexDomain::klein(p, cfg);
  }
  std::vector<Vec> rows;
  for (const auto& r : j.at("data")) rows.push_back(vec_from_json(r));
  std::optional<Vec> hint;
  if (j.contains("interior_point")) hint = vec_from_json(j.at("interior_point"));
  if (type == "halfspace") return ConvexDomain::halfspace(rows, hint, cfg);
  if (type == "hull") {
    std::optional<Vec> chart;
    if (j.contains("chart")) chart = vec_from_json(j.at("chart"));
    return ConvexDomain::hull(rows, chart, cfg);
  }
  throw Error(ErrorCode::ParseError, "domain type must be halfspace, klein, or hull");
}

Json form_to_json(const PQForm& f) {
  Json out;
  if (f.is_standard()) {
    out["p"] = f.p();
    out["q"] = f.q();
  } else {
    out["gram"] = mat_to_json(f.gram());
    out["signature"] = Json::array({f.p(), f.q()});
  }
  return out;
}

PQForm form_from_json(const Json& j, const Config& cfg) {
  if (j.contains("gram")) return PQForm::from_gram(mat_from_json(j.at("gram")), cfg);
  if (j.contains("p") && j.contains("q"))
    return PQForm::standard(j.at("p").get<int>(), j.at("q").get<int>());
  throw Error(ErrorCode::ParseError, "form spec needs 'gram' or 'p'/'q'");
}

std::string cloud_to_csv(const PointCloud& cloud) {
  std::ostringstream os;
  os.precision(17);
  for (int i = 0; i < cloud.dim(); ++i) os << "x" << (i + 1) << ",";
  os << "source,word_length\n";
  for (const auto& p : cloud.points()) {
    for (int i = 0; i < cloud.dim(); ++i) os << p.point.rep()[i] << ",";
    switch (p.source) {
      case CloudSource::ProximalFixedPoint: os << "proximal"; break;
      case CloudSource::OrbitTail: os << "orbit:" << p.seed_index; break;
      case CloudSource::Seed: os << "seed"; break;
    }
    os << "," << p.word_length << "\n";
  }
  return os.str();
}

PointCloud cloud_from_csv(const std::string& text, const Config& cfg) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line))
    throw Error(ErrorCode::ParseError, "empty cloud CSV");
  int n = 0;
  {
    std::istringstream hs(line);
    std::string col;
    while (std::getline(hs, col, ','))
      if (!col.empty() && col[0] == 'x') ++n;
  }
  if (n < 2) throw Error(ErrorCode::ParseError, "cloud CSV needs coordinate columns");
  PointCloud cloud(n, cfg.cloud_dedup);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    Vec v(n);
    for (int i = 0; i < n; ++i) {
      if (!std::getline(ls, cell, ','))
        throw Error(ErrorCode::ParseError, "short cloud CSV row");
      v[i] = std::stod(cell);
    }
    CloudPoint p;
    p.point = ProjPoint(v, cfg);
    if (std::getline(ls, cell, ',')) {
      if (cell == "proximal")
        p.source = CloudSource::ProximalFixedPoint;
      else if (cell.rfind("orbit", 0) == 0) {
        p.source = CloudSource::OrbitTail;
        auto colon = cell.find(':');
        if (colon != std::string::npos)
          p.seed_index = std::stoi(cell.substr(colon + 1));
      } else
        p.source = CloudSource::Seed;
    }
    if (std::getline(ls, cell, ',')) p.word_length = std::stoi(cell);
    cloud.add(p);
  }
  return cloud;
}

Json gap_profile_to_json(const GapProfile& p) {
  Json out;
  out["gap"] = Json::array({p.i, p.j});
  out["slope"] = p.slope;
  out["r2"] = p.r2;
  out["verdict"] = gap_verdict_name(p.verdict);
  Json rows = Json::array();
  for (const auto& st : p.per_radius)
    rows.push_back({{"r", st.r},
                    {"count", st.count},
                    {"min", st.min},
                    {"mean", st.mean},
                    {"max", st.max}});
  out["per_radius"] = rows;
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json out;
  out["verdict"] = verdict_name(v.kind);
  out["radius"] = v.radius;
  out["epsilon_used"] = v.epsilon_used;
  out["cloud_size"] = v.cloud_size;
  out["gap_profile"] = gap_profile_to_json(v.gap);
  Json segs = Json::array();
  for (const auto& s : v.segments) {
    segs.push_back({{"i", s.i},
                    {"j", s.j},
                    {"a", vec_to_json(v.cloud_points[s.i].point.rep())},
                    {"b", vec_to_json(v.cloud_points[s.j].point.rep())}});
  }
  out["segments"] = segs;
  Json pets = Json::array();
  for (const auto& p : v.pets) {
    pets.push_back({{"i", p.i},
                    {"j", p.j},
                    {"k", p.k},
                    {"a", vec_to_json(v.cloud_points[p.i].point.rep())},
                    {"b", vec_to_json(v.cloud_points[p.j].point.rep())},
                    {"c", vec_to_json(v.cloud_points[p.k].point.rep())}});
  }
  out["pets"] = pets;
  out["core"] = {{"degenerate", v.core_degenerate},
                 {"rho_hat", v.rho_hat},
                 {"rho_hat_prev", v.rho_hat_prev},
                 {"stable", v.core_stable}};
  out["domain_constructed"] = v.domain_constructed;
  out["notes"] = v.notes;
  return out;
}

Json descriptor_to_json(const ExampleDescriptor& ex) {
  Json out;
  out["name"] = ex.name;
  out["params"] = ex.params;
  out["group"] = group_to_json(ex.group);
  if (ex.domain) out["domain"] = domain_to_json(*ex.domain);
  if (ex.form) out["form"] = form_to_json(*ex.form);
  if (ex.expected_verdict) out["expected_verdict"] = verdict_name(*ex.expected_verdict);
  Json checks = Json::array();
  for (const auto& c : ex.checks)
    checks.push_back({{"name", c.name}, {"value", c.value}});
  out["self_checks"] = checks;
  if (ex.name == "schottky_so21")
    out["ping_pong_certified"] = ex.ping_pong_certified;
  return out;
}

Json config_to_json(const Config& cfg) {
  Json out;
  out["seed"] = cfg.seed;
  out["eps_point"] = cfg.eps_point;
  out["eps_mat"] = cfg.eps_mat;
  out["tau_proximal"] = cfg.tau_proximal;
  out["boundary_band"] = cfg.boundary_band;
  out["bisect_tol"] = cfg.bisect_tol;
  out["cloud_dedup"] = cfg.cloud_dedup;
  out["segment_eps"] = cfg.segment_eps;
  out["segment_probes"] = cfg.segment_probes;
  out["slope_min"] = cfg.slope_min;
  out["gap_max"] = cfg.gap_max;
  out["r2_floor"] = cfg.r2_floor;
  out["tau_transverse"] = cfg.tau_transverse;
  out["ball_cap"] = cfg.ball_cap;
  return out;
}

bool validate_against_schema(const Json& doc, const Json& schema, std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  if (schema.contains("type")) {
    const std::string t = schema.at("type").get<std::string>();
    if (t == "object" && !doc.is_object()) return fail("expected object");
    if (t == "array" && !doc.is_array()) return fail("expected array");
    if (t == "string" && !doc.is_string()) return fail("expected string");
    if (t == "number" && !doc.is_number()) return fail("expected number");
    if (t == "integer" && !doc.is_number_integer()) return fail("expected integer");
    if (t == "boolean" && !doc.is_boolean()) return fail("expected boolean");
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& v : schema.at("enum")) ok = ok || v == doc;
    if (!ok) return fail("value not in enum");
  }
  if (schema.contains("required")) {
    for (const auto& key : schema.at("required"))
      if (!doc.contains(key.get<std::string>()))
        return fail("missing required key " + key.get<std::string>());
  }
  if (schema.contains("properties") && doc.is_object()) {
    for (const auto& [key, sub] : schema.at("properties").items()) {
      if (doc.contains(key) &&
          !validate_against_schema(doc.at(key), sub, error))
        return false;
    }
  }
  if (schema.contains("items") && doc.is_array()) {
    for (const auto& item : doc)
      if (!validate_against_schema(item, schema.at("items"), error)) return false;
  }
  return true;
}

}  // namespace convexcore
