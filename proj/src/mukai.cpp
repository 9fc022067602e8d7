#include "coxcheck/mukai.hpp"

#include "coxcheck/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace coxcheck {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::failed: return "failed";
    case Verdict::assumed: return "assumed";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

bool Checklist::holds() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.verdict == Verdict::failed; });
}

const Check* Checklist::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string vec_str(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

RatVector mat_vec(const IntMatrix& q, std::span<const Rational> y) {
  RatVector out(q.rows());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) out[i] += q(i, j) * y[j];
  return out;
}

bool in_cone(const IndexSet& cone, std::size_t ray) { return std::binary_search(cone.begin(), cone.end(), ray); }

struct Analysis {
  Checklist checklist;
  DivisorClass l;
  std::optional<Fan> ambient;
  std::optional<Bunch> phi;
  std::vector<std::string> contradictions;
};

void validate_shapes(const ConstructionInput& c) {
  const auto& p = c.presentation;
  const std::size_t m = p.generator_count(), rho = p.class_rank();
  if (c.delta_rays && c.delta_rays->size() != m)
    throw std::invalid_argument("delta: expected " + std::to_string(m) + " ray coefficients");
  if (c.delta_class && c.delta_class->size() != rho)
    throw std::invalid_argument("delta: class has the wrong length");
  if (c.polarization && c.polarization->size() != rho)
    throw std::invalid_argument("polarization has the wrong length");
  if (c.ambient) {
    if (c.ambient->ray_count() != m)
      throw std::invalid_argument("ambient fan has " + std::to_string(c.ambient->ray_count()) + " rays but there are " +
                                  std::to_string(m) + " generators");
    if (!is_gale_pair(c.ambient->rays(), p.degrees()))
      throw std::invalid_argument("ambient fan rays are not Gale dual to the degree matrix");
  }
}

Analysis analyse(const ConstructionInput& c) {
  validate_shapes(c);
  const auto& p = c.presentation;
  const std::size_t m = p.generator_count();
  Analysis an;
  an.l = anticanonical_class(p);
  RatVector l = to_rational(an.l);
  auto& checks = an.checklist.checks;

  // Z
  try {
    an.ambient = resolve_ambient(c);
    checks.push_back({"ambient_fan", Verdict::verified,
                      std::string(c.ambient ? "given" : "reconstructed") + ": d = " +
                          std::to_string(an.ambient->dimension()) + ", " +
                          std::to_string(an.ambient->cones().size()) + " maximal cones"});
  } catch (const std::domain_error& e) {
    checks.push_back({"ambient_fan", Verdict::failed, e.what()});
  }
  if (an.ambient) {
    FanProperties props = fan_checks(*an.ambient);
    bool ok = props.is_smooth && props.is_complete;
    checks.push_back({"ambient_smooth_complete", ok ? Verdict::verified : Verdict::failed,
                      std::string("smooth=") + (props.is_smooth ? "yes" : "no") +
                          " complete=" + (props.is_complete ? "yes" : "no")});
  } else {
    checks.push_back({"ambient_smooth_complete", Verdict::skipped, "no ambient fan"});
  }

  bool movable = moving_cone(p).contains_interior(l);
  checks.push_back({"anticanonical_movable", movable ? Verdict::verified : Verdict::failed,
                    "[-K_X] = " + vec_str(an.l) + (movable ? " in" : " not in") + " Mov(R)°"});

  // ampleness of L = [-(K_Z + Delta)] on Z, chamber route
  std::optional<bool> chamber_ample;
  if (an.ambient) {
    std::string witness = "all maximal cones";
    bool ok = true;
    for (const auto& sigma : an.ambient->cones()) {
      RationalCone tau;
      tau.dimension = p.class_rank();
      for (std::size_t i = 0; i < m; ++i)
        if (!in_cone(sigma, i)) tau.generators.push_back(to_rational(p.degree(i)));
      if (!cone_membership(l, tau, true)) {
        ok = false;
        std::ostringstream os;
        os << "L not interior to the Gale cone of maximal cone {";
        for (std::size_t k = 0; k < sigma.size(); ++k) os << (k ? "," : "") << sigma[k] + 1;
        os << "}";
        witness = os.str();
        break;
      }
    }
    chamber_ample = ok;
    checks.push_back({"anticanonical_ample_chamber", ok ? Verdict::verified : Verdict::failed, witness});
  } else {
    checks.push_back({"anticanonical_ample_chamber", Verdict::skipped, "no ambient fan"});
  }

  // ray-wise route
  std::optional<bool> ray_ample;
  if (c.delta_rays && an.ambient && fan_checks(*an.ambient).is_simplicial) {
    RatVector a(m);
    for (std::size_t i = 0; i < m; ++i) a[i] = 1 - Rational((*c.delta_rays)[i]);
    ray_ample = is_ample(*an.ambient, a);
    checks.push_back({"anticanonical_ample_rays", *ray_ample ? Verdict::verified : Verdict::failed,
                      "support function of sum (1 - delta_i) D_i " +
                          std::string(*ray_ample ? "strictly convex" : "not strictly convex")});
  } else {
    checks.push_back({"anticanonical_ample_rays", Verdict::skipped,
                      c.delta_rays ? "ambient fan unavailable" : "Delta not given ray-wise"});
  }

  // [Delta] = sum deg(g_j)
  DivisorClass relation_sum(p.class_rank());
  for (const auto& g : p.relation_degrees())
    for (std::size_t q = 0; q < g.size(); ++q) relation_sum[q] += g[q];
  {
    std::vector<std::pair<std::string, DivisorClass>> declared;
    if (c.delta_rays) {
      DivisorClass dc(p.class_rank());
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t q = 0; q < dc.size(); ++q) dc[q] += p.degrees()(q, i) * (*c.delta_rays)[i];
      declared.emplace_back("Q delta", dc);
    }
    if (c.delta_class) declared.emplace_back("[Delta]", *c.delta_class);
    if (declared.empty()) {
      checks.push_back({"delta_class", Verdict::assumed,
                        "Delta not given; [Delta] taken as sum deg(g_j) = " + vec_str(relation_sum)});
    } else {
      bool ok = true;
      std::string witness = "sum deg(g_j) = " + vec_str(relation_sum);
      for (const auto& [label, value] : declared) {
        witness += ", " + label + " = " + vec_str(value);
        ok = ok && value == relation_sum;
      }
      checks.push_back({"delta_class", ok ? Verdict::verified : Verdict::failed, witness});
    }
  }
  if (chamber_ample && ray_ample && *chamber_ample != *ray_ample &&
      an.checklist.find("delta_class")->verdict == Verdict::verified)
    an.contradictions.push_back("ampleness: chamber test and ray-wise support-function test disagree");

  if (p.relation_count() == 0) {
    checks.push_back({"relations_homogeneous", Verdict::verified, "no relations"});
  } else if (p.has_polynomials()) {
    checks.push_back({"relations_homogeneous", Verdict::verified, "graded degree of every g_j equals its declared degree"});
  } else {
    checks.push_back({"relations_homogeneous", Verdict::assumed, "relation polynomials not given; degrees declared"});
  }

  for (std::size_t j = 0; j < p.relation_count(); ++j) {
    const auto& g = p.relation_degrees()[j];
    bool ok = degree_not_small(g, p);
    checks.push_back({"relation_degree_not_small_" + std::to_string(j + 1), ok ? Verdict::verified : Verdict::failed,
                      "deg(g_" + std::to_string(j + 1) + ") = " + vec_str(g) +
                          (ok ? " outside conv(0, degrees) \\ conv(degrees)" : " lies in conv(0, degrees) \\ conv(degrees)")});
  }

  checks.push_back({"factorial_complete_intersection", p.relation_count() == 0 ? Verdict::verified : Verdict::assumed,
                    p.relation_count() == 0 ? "polynomial ring" : "declared input"});

  bool units = units_condition_sufficient(p);
  checks.push_back({"units_condition", units ? Verdict::verified : Verdict::assumed,
                    units ? "degrees nonzero and their cone is pointed" : "sufficient test inconclusive"});

  try {
    an.phi = phi_bunch(p, an.l);
    bool ok = !an.phi->cones.empty() && is_locally_factorial(*an.phi);
    checks.push_back({"locally_factorial", ok ? Verdict::verified : Verdict::failed,
                      std::to_string(an.phi->cones.size()) + " members in Phi(L)" +
                          (an.phi->phi_assumed_maximal ? " (assumed maximal)" : "")});
  } catch (const std::domain_error& e) {
    checks.push_back({"locally_factorial", Verdict::failed, e.what()});
  }
  return an;
}

}  // namespace

bool degree_not_small(std::span<const Integer> delta, const GradedCoxPresentation& p) {
  std::vector<RatVector> degrees;
  for (const auto& d : p.degree_list()) degrees.push_back(to_rational(d));
  RatVector x = to_rational(delta);
  return !(hull_membership(x, degrees, true) && !hull_membership(x, degrees, false));
}

Fan resolve_ambient(const ConstructionInput& c) {
  if (c.ambient) return *c.ambient;
  DivisorClass l = c.polarization ? *c.polarization : anticanonical_class(c.presentation);
  return ambient_fan(c.presentation, l);
}

Checklist check_construction(const ConstructionInput& c) { return analyse(c).checklist; }

Integer fano_index(std::span<const Integer> l, const LatticeBasis& pic) { return divisibility_index(pic, l); }

Representative low_coefficient_representative(const ConstructionInput& c) {
  const auto& p = c.presentation;
  const std::size_t m = p.generator_count(), rho = p.class_rank(), r = p.relation_count();
  const RatVector l = to_rational(anticanonical_class(p));
  const Rational budget(static_cast<long>(m - r));

  LPProblem lp = LPProblem::nonnegative(m);
  for (std::size_t q = 0; q < rho; ++q) {
    RatVector row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = p.degrees()(q, i);
    lp.add_row(row, l[q]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    lp.upper[i] = Rational(1);
    lp.c[i] = 1;
  }
  LPResult first = lp_solve(lp);
  if (first.status != LPStatus::optimal)
    throw TheoremContradiction("representative: [-K_X] is not in Q([0,1]^m)");
  if (first.objective > budget)
    throw TheoremContradiction("representative: minimal coefficient sum " + first.objective.get_str() +
                               " exceeds m - r = " + budget.get_str());

  Representative rep;
  rep.lp_optimum = first.x;
  bool positive = std::all_of(first.x.begin(), first.x.end(), [](const Rational& v) { return v > 0; });
  if (positive) {
    rep.a = WeightedRays(first.x);
    rep.sum = first.objective;
    return rep;
  }

  // max t  s.t.  Q y = L,  t <= y_i <= 1,  sum y <= m - r.
  // variables: y (m), t, u (m) with y_i - t - u_i = 0, w with sum y + w = m - r
  const std::size_t nv = 2 * m + 2, t = m, w = 2 * m + 1;
  LPProblem lp2 = LPProblem::nonnegative(nv);
  for (std::size_t q = 0; q < rho; ++q) {
    RatVector row(nv);
    for (std::size_t i = 0; i < m; ++i) row[i] = p.degrees()(q, i);
    lp2.add_row(row, l[q]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    RatVector row(nv);
    row[i] = 1;
    row[t] = -1;
    row[m + 1 + i] = -1;
    lp2.add_row(row, 0);
    lp2.upper[i] = Rational(1);
  }
  RatVector sum_row(nv);
  for (std::size_t i = 0; i < m; ++i) sum_row[i] = 1;
  sum_row[w] = 1;
  lp2.add_row(sum_row, budget);
  lp2.lower[t] = std::nullopt;
  lp2.upper[t] = Rational(1);
  lp2.c[t] = -1;
  LPResult second = lp_solve(lp2);
  if (second.status != LPStatus::optimal || second.x[t] <= 0)
    throw TheoremContradiction("representative: no strictly positive a in the fiber with sum a <= m - r");

  RatVector a(m);
  Rational sum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    a[i] = (first.x[i] + second.x[i]) / 2;
    sum += a[i];
  }
  if (mat_vec(p.degrees(), a) != l) throw std::logic_error("representative: Q a != [-K_X]");
  rep.a = WeightedRays(std::move(a));
  rep.sum = sum;
  rep.adjusted = true;
  return rep;
}

IndexBounds index_bounds(const Fan& f, std::span<const Rational> a) {
  IndexBounds out;
  out.cartier = cartier_data(f, a);
  std::vector<std::vector<BoundEntry>> per_cone(f.cones().size());
  parallel_for(f.cones().size(), [&](std::size_t s) {
    for (std::size_t v = 0; v < f.ray_count(); ++v) {
      if (in_cone(f.cones()[s], v)) continue;
      Rational value = dot(to_rational(f.ray(v)), out.cartier[s]) + a[v];
      per_cone[s].push_back({s, v, value});
    }
  });
  bool first = true;
  for (auto& entries : per_cone)
    for (auto& e : entries) {
      if (e.value <= 0)
        throw std::domain_error("index_bounds: <v, C_sigma> + a_v = " + e.value.get_str() + " <= 0 for ray " +
                                std::to_string(e.ray + 1) + ", so a is not ample");
      if (first || e.value < out.minimum) out.minimum = e.value;
      first = false;
      out.entries.push_back(std::move(e));
    }
  return out;
}

ExtractionForm extraction_form(const Fan& f, const IntMatrix& degrees, std::size_t sigma, std::size_t v) {
  const IndexSet& cone = f.cones().at(sigma);
  if (in_cone(cone, v)) throw std::domain_error("extraction_form: v is a ray of sigma");
  const std::size_t d = f.dimension(), m = f.ray_count();
  if (degrees.cols() != m) throw std::invalid_argument("extraction_form: degree matrix has the wrong width");
  RatMatrix w(d, cone.size());
  for (std::size_t k = 0; k < cone.size(); ++k)
    for (std::size_t q = 0; q < d; ++q) w(q, k) = f.rays()(q, cone[k]);
  RatVector minus_v = to_rational(f.ray(v));
  for (auto& x : minus_v) x = -x;
  auto lambda = solve(w, minus_v);
  if (!lambda || rank(w) != d) throw std::domain_error("extraction_form: sigma is not full-dimensional");

  ExtractionForm e;
  e.cone = sigma;
  e.ray = v;
  e.gale_values.assign(m, Rational(0));
  e.gale_values[v] = 1;
  for (std::size_t k = 0; k < cone.size(); ++k) e.gale_values[cone[k]] = (*lambda)[k];

  auto form = solve(to_rational(degrees).transpose(), e.gale_values);
  if (!form) throw std::logic_error("extraction_form: relation does not induce a form on the class group");
  e.form = std::move(*form);
  return e;
}

ExtractionForm extraction_form(const Fan& f, std::size_t sigma, std::size_t v) {
  return extraction_form(f, gale_dual(f.rays()), sigma, v);
}

RatVector barycentric_certificate(std::span<const RatVector> cartier) {
  const std::size_t k = cartier.size();
  if (k == 0) throw std::domain_error("barycentric_certificate: no Cartier data");
  const std::size_t d = cartier[0].size();

  auto base = [&](std::size_t vars) {
    LPProblem lp = LPProblem::nonnegative(vars);
    for (std::size_t q = 0; q < d; ++q) {
      RatVector row(vars);
      for (std::size_t s = 0; s < k; ++s) row[s] = cartier[s][q];
      lp.add_row(row, 0);
    }
    RatVector ones(vars);
    for (std::size_t s = 0; s < k; ++s) ones[s] = 1;
    lp.add_row(ones, 1);
    for (std::size_t s = 0; s < k; ++s) lp.upper[s] = Rational(1);
    return lp;
  };

  // maximise the smallest weight: variables m (k), t, slack (k)
  LPProblem lp = base(2 * k + 1);
  for (std::size_t s = 0; s < k; ++s) {
    RatVector row(2 * k + 1);
    row[s] = 1;
    row[k] = -1;
    row[k + 1 + s] = -1;
    lp.add_row(row, 0);
  }
  lp.c[k] = -1;
  LPResult res = lp_solve(lp);
  if (res.status != LPStatus::optimal) throw std::domain_error("barycentric_certificate: origin not in moment polytope");
  const Rational floor = res.x[k];

  LPProblem lex = base(k);
  for (std::size_t s = 0; s < k; ++s) lex.lower[s] = floor;
  RatVector weights(k);
  for (std::size_t s = 0; s < k; ++s) {
    std::fill(lex.c.begin(), lex.c.end(), Rational(0));
    lex.c[s] = 1;
    LPResult step = lp_solve(lex);
    if (step.status != LPStatus::optimal) throw std::logic_error("barycentric_certificate: lexicographic step failed");
    weights[s] = step.x[s];
    lex.lower[s] = lex.upper[s] = weights[s];
  }

  RatVector total(d);
  Rational mass = 0;
  for (std::size_t s = 0; s < k; ++s) {
    mass += weights[s];
    for (std::size_t q = 0; q < d; ++q) total[q] += weights[s] * cartier[s][q];
  }
  if (mass != 1 || !is_zero(std::span<const Rational>(total)))
    throw std::logic_error("barycentric_certificate: weights fail substitution");
  return weights;
}

EqualityRecognition recognize_equality_case(const Fan& f, std::span<const Rational> a, const Integer& index,
                                            const GradedCoxPresentation& p) {
  EqualityRecognition out;
  auto& bad = out.contradictions;
  const std::size_t d = f.dimension(), m = f.ray_count();
  const Rational i(index);
  auto cartier = cartier_data(f, a);

  for (std::size_t s = 0; s < f.cones().size(); ++s)
    for (std::size_t v = 0; v < m; ++v) {
      if (in_cone(f.cones()[s], v)) continue;
      Rational value = dot(to_rational(f.ray(v)), cartier[s]) + a[v];
      if (value != i)
        bad.push_back("equality: bound at cone " + std::to_string(s) + ", ray " + std::to_string(v + 1) + " is " +
                      value.get_str() + ", not i_X");
    }
  for (std::size_t v = 0; v < m; ++v)
    if (a[v] != 1) bad.push_back("equality: a_" + std::to_string(v + 1) + " = " + a[v].get_str() + " is not 1");

  const IndexSet& base = f.cones()[0];
  std::vector<std::size_t> neighbours;
  try {
    neighbours = facet_neighbors(f, 0);
  } catch (const std::domain_error& e) {
    bad.push_back(std::string("equality: ") + e.what());
    return out;
  }
  RatMatrix w(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t q = 0; q < d; ++q) w(q, k) = f.rays()(q, base[k]);

  std::vector<std::size_t> owner(d, m);
  for (std::size_t v = 0; v < m; ++v) {
    if (in_cone(base, v)) continue;
    auto coords = solve(w, to_rational(f.ray(v)));
    IndexSet part;
    for (std::size_t k = 0; k < d; ++k) {
      // coordinate of v along w_k, read off the Cartier data of the neighbour
      Rational c = dot(to_rational(f.ray(v)), cartier[neighbours[k]]);
      c -= dot(to_rational(f.ray(v)), cartier[0]);
      c /= i;
      if (!coords || (*coords)[k] != c)
        bad.push_back("equality: coordinate of ray " + std::to_string(v + 1) + " disagrees with Cartier data");
      bool in_neighbour = in_cone(f.cones()[neighbours[k]], v);
      if (c == -1 && in_neighbour) {
        part.push_back(k);
        if (owner[k] != m)
          bad.push_back("equality: index " + std::to_string(k + 1) + " claimed by two rays");
        owner[k] = v;
      } else if (c != 0 || in_neighbour) {
        bad.push_back("equality: ray " + std::to_string(v + 1) + " has coordinate " + c.get_str() +
                      " along w_" + std::to_string(k + 1));
      }
    }
    if (Integer(part.size()) != index - 1)
      bad.push_back("equality: |I(v)| = " + std::to_string(part.size()) + " for ray " + std::to_string(v + 1) +
                    ", expected i_X - 1");
    out.parts.push_back(std::move(part));
  }
  for (std::size_t k = 0; k < d; ++k)
    if (owner[k] == m) bad.push_back("equality: index " + std::to_string(k + 1) + " not covered by any I(v)");
  if (out.parts.size() != p.class_rank())
    bad.push_back("equality: " + std::to_string(out.parts.size()) + " rays outside the base cone, expected rho_X");

  for (std::size_t j = 0; j < p.relation_count(); ++j) {
    const auto& g = p.relation_degrees()[j];
    bool generator_degree = false;
    for (std::size_t t = 0; t < p.generator_count(); ++t) generator_degree |= p.degree(t) == g;
    bad.push_back("equality: relation " + std::to_string(j + 1) +
                  (generator_degree ? " has the degree of a generator, so it would be a generator itself"
                                    : " does not have a generator degree, so the coefficient-sum bound is strict"));
  }
  if (bad.empty()) out.factors = std::vector<std::size_t>(p.class_rank(), static_cast<std::size_t>(index.get_ui() - 1));
  return out;
}

Outcome MukaiReport::outcome() const {
  if (!contradictions.empty()) return Outcome::contradiction;
  if (!checklist.holds()) return Outcome::hypothesis_failed;
  return Outcome::verified;
}

MukaiReport verify_mukai_inequality(const ConstructionInput& c) {
  const auto& p = c.presentation;
  MukaiReport rep;
  rep.m = p.generator_count();
  rep.r = p.relation_count();
  rep.rho = p.class_rank();
  rep.d = rep.m - rep.rho;
  rep.n = rep.m - rep.r - rep.rho;
  rep.degrees = p.degrees();
  rep.relation_degrees = p.relation_degrees();
  rep.anticanonical = anticanonical_class(p);
  rep.ambient_anticanonical = DivisorClass(rep.rho);
  for (std::size_t i = 0; i < rep.m; ++i)
    for (std::size_t q = 0; q < rep.rho; ++q) rep.ambient_anticanonical[q] += p.degrees()(q, i);

  if (rep.m < rep.r + rep.rho) throw std::invalid_argument("presentation: m - r < rho, so n would be negative");

  Analysis an = analyse(c);
  rep.checklist = an.checklist;
  rep.ambient = an.ambient;
  rep.contradictions = an.contradictions;
  if (an.phi) {
    rep.phi = an.phi->index_sets;
    rep.phi_assumed_maximal = an.phi->phi_assumed_maximal;
  }
  if (!rep.checklist.holds() || !rep.contradictions.empty()) return rep;

  const Fan& f = *rep.ambient;
  auto& bad = rep.contradictions;
  try {
    LatticeBasis pic = picard_group(*an.phi);
    rep.picard_basis = pic.vectors();
    if (pic.rank() != rep.rho || lattice_index(pic) != Integer(1))
      bad.push_back("Pic(X) is not the full class group although Z is smooth");
    rep.fano_index = fano_index(rep.anticanonical, pic);
    rep.hyperplane = rep.anticanonical;
    for (auto& x : rep.hyperplane) x /= rep.fano_index;
    rep.hyperplane_coordinates = *pic.coordinates(rep.hyperplane);

    Representative a = low_coefficient_representative(c);
    rep.a = a.a.values();
    rep.a_sum = a.sum;
    rep.a_adjusted = a.adjusted;

    IndexBounds bounds;
    try {
      bounds = index_bounds(f, rep.a);
    } catch (const std::domain_error& e) {
      throw TheoremContradiction(e.what());
    }
    rep.cartier = bounds.cartier;
    rep.bounds = bounds.entries;
    rep.min_bound = bounds.minimum;
    const Rational i(rep.fano_index);
    if (i > rep.min_bound) bad.push_back("i_X exceeds the smallest bound " + rep.min_bound.get_str());

    rep.forms.resize(rep.bounds.size());
    RatVector l = to_rational(rep.anticanonical);
    std::vector<std::string> form_errors(rep.bounds.size());
    parallel_for(rep.bounds.size(), [&](std::size_t k) {
      const auto& b = rep.bounds[k];
      ExtractionForm e = extraction_form(f, rep.degrees, b.cone, b.ray);
      Rational value = dot(e.form, l);
      if (value != b.value) form_errors[k] = "l(-K_X) differs from <v, C_sigma> + a_v";
      for (const auto& basis : rep.picard_basis)
        if (dot(e.form, to_rational(basis)).get_den() != 1) form_errors[k] = "l is not integral on Pic(X)";
      Rational quotient = value / i;
      if (quotient.get_den() != 1) form_errors[k] = "l(-K_X) = " + value.get_str() + " is not divisible by i_X";
      rep.forms[k] = std::move(e);
    });
    for (std::size_t k = 0; k < form_errors.size(); ++k)
      if (!form_errors[k].empty())
        bad.push_back("extraction form (" + std::to_string(rep.bounds[k].cone) + ", " +
                      std::to_string(rep.bounds[k].ray + 1) + "): " + form_errors[k]);

    try {
      rep.weights = barycentric_certificate(rep.cartier);
    } catch (const std::domain_error& e) {
      throw TheoremContradiction(e.what());
    }

    if (i * Rational(static_cast<long>(rep.rho)) > rep.a_sum)
      bad.push_back("i_X rho_X exceeds sum a_v");
    rep.lhs = (rep.fano_index - 1) * static_cast<unsigned long>(rep.rho);
    rep.inequality_holds = rep.lhs <= Integer(static_cast<unsigned long>(rep.n));
    if (!rep.inequality_holds) bad.push_back("Mukai inequality fails");
    rep.gamma = Rational(static_cast<long>(rep.n + rep.rho)) - rep.a_sum;
    if (rep.gamma < 0) bad.push_back("complexity gamma is negative");
    rep.equality = rep.lhs == Integer(static_cast<unsigned long>(rep.n));
    if (rep.equality) {
      EqualityRecognition eq = recognize_equality_case(f, rep.a, rep.fano_index, p);
      rep.factors = eq.factors;
      bad.insert(bad.end(), eq.contradictions.begin(), eq.contradictions.end());
    }
    rep.computed = true;
  } catch (const TheoremContradiction& e) {
    bad.push_back(e.what());
  }
  return rep;
}

}  // namespace coxcheck
