#include "coxcheck/report.hpp"

#include "coxcheck/instance.hpp"
#include "json_util.hpp"

#include <sstream>

namespace coxcheck {

using namespace jsonio;

int exit_code(const MukaiReport& r) {
  switch (r.outcome()) {
    case Outcome::verified: return exit_ok;
    case Outcome::hypothesis_failed: return exit_hypothesis;
    case Outcome::contradiction: return exit_contradiction;
  }
  return exit_contradiction;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::verified: return "verified";
    case Outcome::hypothesis_failed: return "hypothesis_failed";
    case Outcome::contradiction: return "contradiction";
  }
  return "?";
}

namespace {

std::string fmt(const Rational& q) { return q.get_str(); }
std::string fmt(const Integer& z) { return z.get_str(); }

template <class V>
std::string tuple(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
  return s + ")";
}

std::string braces(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

Verdict verdict_from(const std::string& s, const std::string& ptr) {
  for (Verdict v : {Verdict::verified, Verdict::failed, Verdict::assumed, Verdict::skipped})
    if (s == to_string(v)) return v;
  fail(ptr, "unknown verdict \"" + s + "\"");
}

const json& at(const json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) fail(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(child(ptr, key), "missing field");
  return *it;
}

bool boolean(const json& j, const std::string& ptr) {
  if (!j.is_boolean()) fail(ptr, "expected true or false");
  return j.get<bool>();
}

std::vector<RatVector> rat_vectors(const json& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array");
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(to_rat_vector(j[i], child(ptr, i)));
  return out;
}

}  // namespace

std::string report_to_json(const MukaiReport& r, const std::string& instance_name) {
  json root;
  root["format"] = "coxcheck-report";
  root["version"] = 1;
  root["instance"] = instance_name;
  root["outcome"] = to_string(r.outcome());
  root["exit"] = exit_code(r);
  json checks = json::array();
  for (const auto& c : r.checklist.checks)
    checks.push_back(json{{"name", c.name}, {"verdict", to_string(c.verdict)}, {"witness", c.witness}});
  root["checklist"] = checks;
  root["sizes"] = json{{"m", r.m}, {"r", r.r}, {"rho", r.rho}, {"d", r.d}, {"n", r.n}};
  json degs = json::array();
  for (std::size_t i = 0; i < r.degrees.cols(); ++i) degs.push_back(from_int_vector(r.degrees.column(i)));
  root["degrees"] = degs;
  json rdegs = json::array();
  for (const auto& g : r.relation_degrees) rdegs.push_back(from_int_vector(g));
  root["relation_degrees"] = rdegs;
  root["ambient_anticanonical"] = from_int_vector(r.ambient_anticanonical);
  root["anticanonical"] = from_int_vector(r.anticanonical);
  if (r.ambient) {
    json rays = json::array(), cones = json::array();
    for (std::size_t i = 0; i < r.ambient->ray_count(); ++i) rays.push_back(from_int_vector(r.ambient->ray(i)));
    for (const auto& c : r.ambient->cones()) cones.push_back(from_index_set(c));
    root["ambient"] = json{{"rays", rays}, {"cones", cones}};
  } else {
    root["ambient"] = nullptr;
  }
  json phi = json::array();
  for (const auto& j : r.phi) phi.push_back(from_index_set(j));
  root["phi"] = json{{"assumed_maximal", r.phi_assumed_maximal}, {"members", phi}};

  if (r.computed) {
    json cert;
    json pic = json::array();
    for (const auto& b : r.picard_basis) pic.push_back(from_int_vector(b));
    cert["picard_basis"] = pic;
    cert["fano_index"] = from_integer(r.fano_index);
    cert["hyperplane"] = from_int_vector(r.hyperplane);
    cert["hyperplane_coordinates"] = from_int_vector(r.hyperplane_coordinates);
    cert["a"] = from_rat_vector(r.a);
    cert["a_sum"] = from_rational(r.a_sum);
    cert["a_adjusted"] = r.a_adjusted;
    json cartier = json::array();
    for (const auto& c : r.cartier) cartier.push_back(from_rat_vector(c));
    cert["cartier"] = cartier;
    json bounds = json::array();
    for (std::size_t k = 0; k < r.bounds.size(); ++k) {
      const auto& b = r.bounds[k];
      json e{{"cone", b.cone + 1}, {"ray", b.ray + 1}, {"value", from_rational(b.value)}};
      if (k < r.forms.size()) {
        e["form"] = from_rat_vector(r.forms[k].form);
        e["gale_values"] = from_rat_vector(r.forms[k].gale_values);
      }
      bounds.push_back(e);
    }
    cert["bounds"] = bounds;
    cert["min_bound"] = from_rational(r.min_bound);
    cert["weights"] = from_rat_vector(r.weights);
    cert["lhs"] = from_integer(r.lhs);
    cert["inequality_holds"] = r.inequality_holds;
    cert["equality"] = r.equality;
    cert["gamma"] = from_rational(r.gamma);
    cert["factors"] = r.factors ? json(*r.factors) : json(nullptr);
    root["certificate"] = cert;
  } else {
    root["certificate"] = nullptr;
  }
  root["contradictions"] = r.contradictions;
  return root.dump(2) + "\n";
}

MukaiReport report_from_json(std::string_view text) {
  json root = parse_text(text);
  const std::string top;
  if (!root.is_object() || root.value("format", "") != "coxcheck-report") fail("/format", "not a coxcheck report");
  if (to_integer(at(root, top, "version"), "/version") != 1) fail("/version", "unsupported report version");
  MukaiReport r;
  const json& checks = at(root, top, "checklist");
  if (!checks.is_array()) fail("/checklist", "expected an array");
  for (std::size_t k = 0; k < checks.size(); ++k) {
    std::string ptr = child("/checklist", k);
    Check c;
    c.name = at(checks[k], ptr, "name").get<std::string>();
    c.verdict = verdict_from(at(checks[k], ptr, "verdict").get<std::string>(), child(ptr, "verdict"));
    c.witness = at(checks[k], ptr, "witness").get<std::string>();
    r.checklist.checks.push_back(std::move(c));
  }
  const json& sizes = at(root, top, "sizes");
  r.m = to_count(at(sizes, "/sizes", "m"), "/sizes/m");
  r.r = to_count(at(sizes, "/sizes", "r"), "/sizes/r");
  r.rho = to_count(at(sizes, "/sizes", "rho"), "/sizes/rho");
  r.d = to_count(at(sizes, "/sizes", "d"), "/sizes/d");
  r.n = to_count(at(sizes, "/sizes", "n"), "/sizes/n");
  auto degs = to_int_vectors(at(root, top, "degrees"), "/degrees");
  r.degrees = degs.empty() ? IntMatrix(r.rho, 0) : IntMatrix::from_columns(degs[0].size(), degs);
  r.relation_degrees = to_int_vectors(at(root, top, "relation_degrees"), "/relation_degrees");
  r.ambient_anticanonical = to_int_vector(at(root, top, "ambient_anticanonical"), "/ambient_anticanonical");
  r.anticanonical = to_int_vector(at(root, top, "anticanonical"), "/anticanonical");
  const json& amb = at(root, top, "ambient");
  if (!amb.is_null()) {
    auto rays = to_int_vectors(at(amb, "/ambient", "rays"), "/ambient/rays");
    const json& cones = at(amb, "/ambient", "cones");
    if (rays.empty() || !cones.is_array()) fail("/ambient", "malformed fan");
    std::vector<IndexSet> cs;
    for (std::size_t k = 0; k < cones.size(); ++k) cs.push_back(to_index_set(cones[k], child("/ambient/cones", k), rays.size()));
    try {
      r.ambient = Fan(IntMatrix::from_columns(rays[0].size(), rays), cs);
    } catch (const std::exception& e) {
      fail("/ambient", e.what());
    }
  }
  const json& phi = at(root, top, "phi");
  r.phi_assumed_maximal = boolean(at(phi, "/phi", "assumed_maximal"), "/phi/assumed_maximal");
  const json& members = at(phi, "/phi", "members");
  if (!members.is_array()) fail("/phi/members", "expected an array");
  for (std::size_t k = 0; k < members.size(); ++k)
    r.phi.push_back(to_index_set(members[k], child("/phi/members", k), r.m));

  const json& cert = at(root, top, "certificate");
  if (!cert.is_null()) {
    const std::string c = "/certificate";
    r.computed = true;
    r.picard_basis = to_int_vectors(at(cert, c, "picard_basis"), c + "/picard_basis");
    r.fano_index = to_integer(at(cert, c, "fano_index"), c + "/fano_index");
    r.hyperplane = to_int_vector(at(cert, c, "hyperplane"), c + "/hyperplane");
    r.hyperplane_coordinates = to_int_vector(at(cert, c, "hyperplane_coordinates"), c + "/hyperplane_coordinates");
    r.a = to_rat_vector(at(cert, c, "a"), c + "/a");
    r.a_sum = to_rational_value(at(cert, c, "a_sum"), c + "/a_sum");
    r.a_adjusted = boolean(at(cert, c, "a_adjusted"), c + "/a_adjusted");
    r.cartier = rat_vectors(at(cert, c, "cartier"), c + "/cartier");
    const json& bounds = at(cert, c, "bounds");
    if (!bounds.is_array()) fail(c + "/bounds", "expected an array");
    for (std::size_t k = 0; k < bounds.size(); ++k) {
      std::string ptr = child(c + "/bounds", k);
      BoundEntry b;
      std::size_t cone = to_count(at(bounds[k], ptr, "cone"), ptr + "/cone");
      std::size_t ray = to_count(at(bounds[k], ptr, "ray"), ptr + "/ray");
      if (cone == 0 || ray == 0) fail(ptr, "cone and ray numbers are 1-based");
      b.cone = cone - 1;
      b.ray = ray - 1;
      b.value = to_rational_value(at(bounds[k], ptr, "value"), ptr + "/value");
      ExtractionForm e;
      e.cone = b.cone;
      e.ray = b.ray;
      e.form = to_rat_vector(at(bounds[k], ptr, "form"), ptr + "/form");
      e.gale_values = to_rat_vector(at(bounds[k], ptr, "gale_values"), ptr + "/gale_values");
      r.bounds.push_back(std::move(b));
      r.forms.push_back(std::move(e));
    }
    r.min_bound = to_rational_value(at(cert, c, "min_bound"), c + "/min_bound");
    r.weights = to_rat_vector(at(cert, c, "weights"), c + "/weights");
    r.lhs = to_integer(at(cert, c, "lhs"), c + "/lhs");
    r.inequality_holds = boolean(at(cert, c, "inequality_holds"), c + "/inequality_holds");
    r.equality = boolean(at(cert, c, "equality"), c + "/equality");
    r.gamma = to_rational_value(at(cert, c, "gamma"), c + "/gamma");
    const json& factors = at(cert, c, "factors");
    if (!factors.is_null()) {
      std::vector<std::size_t> fs;
      for (std::size_t k = 0; k < factors.size(); ++k) fs.push_back(to_count(factors[k], child(c + "/factors", k)));
      r.factors = fs;
    }
  }
  const json& contra = at(root, top, "contradictions");
  if (!contra.is_array()) fail("/contradictions", "expected an array");
  for (const auto& s : contra) r.contradictions.push_back(s.get<std::string>());
  return r;
}

std::string report_to_text(const MukaiReport& r, const std::string& instance_name) {
  std::ostringstream os;
  os << "instance: " << instance_name << "\n";
  os << "outcome: " << to_string(r.outcome()) << " (exit " << exit_code(r) << ")\n\n";
  os << "hypotheses\n";
  for (const auto& c : r.checklist.checks)
    os << "  [" << to_string(c.verdict) << "] " << c.name << ": " << c.witness << "\n";
  os << "\nsizes: m = " << r.m << ", r = " << r.r << ", rho = " << r.rho << ", d = " << r.d << ", n = " << r.n << "\n";
  os << "degrees:";
  for (std::size_t i = 0; i < r.degrees.cols(); ++i) os << " T" << i + 1 << " " << tuple(r.degrees.column(i));
  os << "\n";
  if (!r.relation_degrees.empty()) {
    os << "relation degrees:";
    for (std::size_t j = 0; j < r.relation_degrees.size(); ++j) os << " g" << j + 1 << " " << tuple(r.relation_degrees[j]);
    os << "\n";
  }
  os << "[-K_Z] = " << tuple(r.ambient_anticanonical) << "\n";
  os << "[-K_X] = " << tuple(r.anticanonical) << "\n";
  if (r.ambient) {
    os << "ambient fan rays:";
    for (std::size_t i = 0; i < r.ambient->ray_count(); ++i) os << " v" << i + 1 << " " << tuple(r.ambient->ray(i));
    os << "\nambient fan cones:";
    for (std::size_t k = 0; k < r.ambient->cones().size(); ++k)
      os << " sigma" << k + 1 << " " << braces(r.ambient->cones()[k]);
    os << "\n";
  }
  os << "Phi(L): " << r.phi.size() << " members" << (r.phi_assumed_maximal ? " (assumed maximal)" : "") << ":";
  for (const auto& j : r.phi) os << " " << braces(j);
  os << "\n";

  if (r.computed) {
    os << "\ncertificate\n";
    os << "  Pic basis:";
    for (const auto& b : r.picard_basis) os << " " << tuple(b);
    os << "\n  i_X = " << r.fano_index << ", H = " << tuple(r.hyperplane) << ", H in Pic basis = "
       << tuple(r.hyperplane_coordinates) << "\n";
    os << "  a = " << tuple(r.a) << ", sum a = " << fmt(r.a_sum) << (r.a_adjusted ? " (moved off the boundary)" : "")
       << "\n";
    os << "  Cartier data:\n";
    for (std::size_t k = 0; k < r.cartier.size(); ++k) os << "    C_sigma" << k + 1 << " = " << tuple(r.cartier[k]) << "\n";
    os << "  bounds <v, C_sigma> + a_v (minimum " << fmt(r.min_bound) << "):\n";
    for (std::size_t k = 0; k < r.bounds.size(); ++k) {
      const auto& b = r.bounds[k];
      os << "    sigma" << b.cone + 1 << ", v" << b.ray + 1 << ": " << fmt(b.value);
      if (k < r.forms.size())
        os << "; l = " << tuple(r.forms[k].form) << ", l(u^) = " << tuple(r.forms[k].gale_values);
      os << "\n";
    }
    os << "  weights m_sigma = " << tuple(r.weights) << "\n";
    os << "  (i_X - 1) rho_X = " << r.lhs << (r.inequality_holds ? " <= " : " > ") << "n = " << r.n
       << (r.equality ? " (equality)" : r.inequality_holds ? " (strict)" : "") << "\n";
    os << "  gamma = " << fmt(r.gamma) << "\n";
    if (r.factors) {
      os << "  equality case: product of projective spaces of dimensions";
      for (auto k : *r.factors) os << " " << k;
      os << "\n";
    }
  } else {
    os << "\nno inequality claim: hypotheses not all verified\n";
  }
  if (!r.contradictions.empty()) {
    os << "\ncontradictions\n";
    for (const auto& c : r.contradictions) os << "  " << c << "\n";
  }
  return os.str();
}

}  // namespace coxcheck
