#include "coxcheck/instance.hpp"

#include "json_util.hpp"

#include <set>

namespace coxcheck {

using namespace jsonio;

namespace {

void only_keys(const json& j, const std::string& ptr, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(ptr, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items())
    if (!ok.count(key)) fail(child(ptr, key), "unknown field");
}

const json& require(const json& j, const std::string& ptr, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(child(ptr, key), "missing required field");
  return *it;
}

std::string require_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) fail(ptr, "expected a string");
  return j.get<std::string>();
}

ExpectedResult parse_expected(const json& j, const std::string& ptr) {
  only_keys(j, ptr, {"exit", "fano_index", "rho", "n", "gamma", "equality", "factors"});
  ExpectedResult e;
  Integer code = to_integer(require(j, ptr, "exit"), child(ptr, "exit"));
  if (code < 0 || code > 3) fail(child(ptr, "exit"), "exit code must be 0..3");
  e.exit_code = static_cast<int>(code.get_si());
  if (j.contains("fano_index")) e.fano_index = to_integer(j["fano_index"], child(ptr, "fano_index"));
  if (j.contains("rho")) e.rho = to_count(j["rho"], child(ptr, "rho"));
  if (j.contains("n")) e.n = to_count(j["n"], child(ptr, "n"));
  if (j.contains("gamma")) e.gamma = to_rational_value(j["gamma"], child(ptr, "gamma"));
  if (j.contains("equality")) {
    if (!j["equality"].is_boolean()) fail(child(ptr, "equality"), "expected true or false");
    e.equality = j["equality"].get<bool>();
  }
  if (j.contains("factors")) {
    const json& fs = j["factors"];
    if (!fs.is_array()) fail(child(ptr, "factors"), "expected an array");
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < fs.size(); ++i) v.push_back(to_count(fs[i], child(child(ptr, "factors"), i)));
    e.factors = v;
  }
  return e;
}

json expected_json(const ExpectedResult& e) {
  json j;
  j["exit"] = e.exit_code;
  if (e.fano_index) j["fano_index"] = from_integer(*e.fano_index);
  if (e.rho) j["rho"] = *e.rho;
  if (e.n) j["n"] = *e.n;
  if (e.gamma) j["gamma"] = from_rational(*e.gamma);
  if (e.equality) j["equality"] = *e.equality;
  if (e.factors) j["factors"] = *e.factors;
  return j;
}

void require_width(const std::vector<IntVector>& vs, const std::string& ptr, const char* what) {
  if (vs.empty()) fail(ptr, std::string("no ") + what);
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i].size() != vs[0].size()) fail(child(ptr, i), std::string(what) + " have different lengths");
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  json root = parse_text(text);
  const std::string top;
  only_keys(root, top, {"format", "version", "name", "description", "expected", "ambient", "relations", "delta"});
  InstanceFile f;
  if (require_string(require(root, top, "format"), "/format") != "coxcheck-instance")
    fail("/format", "expected \"coxcheck-instance\"");
  Integer version = to_integer(require(root, top, "version"), "/version");
  if (version != InstanceFile::kVersion)
    fail("/version", "unsupported version " + version.get_str() + " (this build reads version 1)");
  f.name = require_string(require(root, top, "name"), "/name");
  if (root.contains("description")) f.description = require_string(root["description"], "/description");
  if (root.contains("expected")) f.expected = parse_expected(root["expected"], "/expected");

  const json& amb = require(root, top, "ambient");
  only_keys(amb, "/ambient", {"degrees", "polarization", "fan"});
  if (amb.contains("degrees") == amb.contains("fan"))
    fail("/ambient", "give exactly one of \"degrees\" and \"fan\"");
  std::size_t m = 0;
  if (amb.contains("degrees")) {
    f.degrees = to_int_vectors(amb["degrees"], "/ambient/degrees");
    require_width(*f.degrees, "/ambient/degrees", "degrees");
    m = f.degrees->size();
    if (amb.contains("polarization")) f.polarization = to_int_vector(amb["polarization"], "/ambient/polarization");
  } else {
    if (amb.contains("polarization")) fail("/ambient/polarization", "only allowed with \"degrees\"");
    const json& fan = amb["fan"];
    only_keys(fan, "/ambient/fan", {"rays", "cones"});
    f.rays = to_int_vectors(require(fan, "/ambient/fan", "rays"), "/ambient/fan/rays");
    require_width(*f.rays, "/ambient/fan/rays", "rays");
    m = f.rays->size();
    const json& cones = require(fan, "/ambient/fan", "cones");
    if (!cones.is_array()) fail("/ambient/fan/cones", "expected an array of cones");
    for (std::size_t k = 0; k < cones.size(); ++k)
      f.cones.push_back(to_index_set(cones[k], child("/ambient/fan/cones", k), m));
  }

  if (root.contains("relations")) {
    const json& rels = root["relations"];
    if (!rels.is_array()) fail("/relations", "expected an array");
    for (std::size_t j = 0; j < rels.size(); ++j) {
      std::string ptr = child("/relations", j);
      only_keys(rels[j], ptr, {"degree", "divisor", "polynomial"});
      RelationSpec r;
      if (rels[j].contains("degree") == rels[j].contains("divisor"))
        fail(ptr, "give exactly one of \"degree\" and \"divisor\"");
      if (rels[j].contains("degree")) r.degree = to_int_vector(rels[j]["degree"], child(ptr, "degree"));
      if (rels[j].contains("divisor")) {
        r.divisor = to_int_vector(rels[j]["divisor"], child(ptr, "divisor"));
        if (r.divisor->size() != m) fail(child(ptr, "divisor"), "expected " + std::to_string(m) + " entries");
      }
      if (rels[j].contains("polynomial")) r.polynomial = require_string(rels[j]["polynomial"], child(ptr, "polynomial"));
      f.relations.push_back(std::move(r));
    }
  }
  if (root.contains("delta")) {
    const json& d = root["delta"];
    only_keys(d, "/delta", {"rays", "class"});
    if (d.contains("rays")) {
      f.delta_rays = to_int_vector(d["rays"], "/delta/rays");
      if (f.delta_rays->size() != m) fail("/delta/rays", "expected " + std::to_string(m) + " entries");
    }
    if (d.contains("class")) f.delta_class = to_int_vector(d["class"], "/delta/class");
  }
  return f;
}

std::string serialize_instance(const InstanceFile& f) {
  json root;
  root["format"] = "coxcheck-instance";
  root["version"] = f.version;
  root["name"] = f.name;
  if (!f.description.empty()) root["description"] = f.description;
  if (f.expected) root["expected"] = expected_json(*f.expected);
  json amb;
  if (f.degrees) {
    json ds = json::array();
    for (const auto& d : *f.degrees) ds.push_back(from_int_vector(d));
    amb["degrees"] = ds;
    if (f.polarization) amb["polarization"] = from_int_vector(*f.polarization);
  } else if (f.rays) {
    json rs = json::array(), cs = json::array();
    for (const auto& r : *f.rays) rs.push_back(from_int_vector(r));
    for (const auto& c : f.cones) cs.push_back(from_index_set(c));
    amb["fan"] = json{{"rays", rs}, {"cones", cs}};
  }
  root["ambient"] = amb;
  json rels = json::array();
  for (const auto& r : f.relations) {
    json j;
    if (r.degree) j["degree"] = from_int_vector(*r.degree);
    if (r.divisor) j["divisor"] = from_int_vector(*r.divisor);
    if (r.polynomial) j["polynomial"] = *r.polynomial;
    rels.push_back(j);
  }
  root["relations"] = rels;
  if (f.delta_rays || f.delta_class) {
    json d;
    if (f.delta_rays) d["rays"] = from_int_vector(*f.delta_rays);
    if (f.delta_class) d["class"] = from_int_vector(*f.delta_class);
    root["delta"] = d;
  }
  return dump_lines(root);
}

ConstructionInput to_construction_input(const InstanceFile& f) {
  IntMatrix q;
  std::optional<Fan> fan;
  if (f.degrees) {
    q = IntMatrix::from_columns(f.degrees->front().size(), *f.degrees);
  } else if (f.rays) {
    IntMatrix p = IntMatrix::from_columns(f.rays->front().size(), *f.rays);
    try {
      fan = Fan(p, f.cones);
      q = gale_dual(p);
    } catch (const std::exception& e) {
      fail("/ambient/fan", e.what());
    }
    if (q.rows() == 0) fail("/ambient/fan", "the rays admit no relations, so the class group is trivial");
  } else {
    fail("/ambient", "no ambient description");
  }
  const std::size_t m = q.cols(), rho = q.rows();

  std::vector<DivisorClass> degs;
  std::vector<Polynomial> polys;
  std::size_t with_poly = 0;
  for (std::size_t j = 0; j < f.relations.size(); ++j) {
    const auto& r = f.relations[j];
    std::string ptr = child("/relations", j);
    if (r.degree) {
      if (r.degree->size() != rho) fail(child(ptr, "degree"), "expected " + std::to_string(rho) + " entries");
      degs.push_back(*r.degree);
    } else {
      DivisorClass d(rho);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < rho; ++k) d[k] += q(k, i) * (*r.divisor)[i];
      degs.push_back(std::move(d));
    }
    if (r.polynomial) {
      ++with_poly;
      try {
        polys.push_back(parse_polynomial(*r.polynomial, m));
      } catch (const PolynomialParseError& e) {
        fail(child(ptr, "polynomial"), e.what());
      }
    }
  }
  if (with_poly != 0 && with_poly != f.relations.size())
    fail("/relations", "give a polynomial for every relation or for none");

  ConstructionInput c;
  try {
    c.presentation = GradedCoxPresentation(q, degs, polys);
  } catch (const std::invalid_argument& e) {
    std::string what = e.what();
    fail(what.find("relation") != std::string::npos ? "/relations" : "/ambient", what);
  }
  c.ambient = fan;
  c.delta_rays = f.delta_rays;
  if (f.delta_class) {
    if (f.delta_class->size() != rho) fail("/delta/class", "expected " + std::to_string(rho) + " entries");
    c.delta_class = f.delta_class;
  }
  if (f.polarization) {
    if (f.polarization->size() != rho) fail("/ambient/polarization", "expected " + std::to_string(rho) + " entries");
    c.polarization = f.polarization;
  }
  return c;
}

}  // namespace coxcheck
