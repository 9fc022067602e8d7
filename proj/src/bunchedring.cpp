#include "coxcheck/bunchedring.hpp"

#include "coxcheck/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxcheck {

namespace {

constexpr std::size_t kMaxSubsetGenerators = 20;

RationalCone cone_of(const GradedCoxPresentation& p, const IndexSet& j) {
  RationalCone c;
  c.dimension = p.class_rank();
  for (auto i : j) c.generators.push_back(to_rational(p.degree(i)));
  return c;
}

IndexSet from_mask(std::size_t mask, std::size_t m) {
  IndexSet s;
  for (std::size_t i = 0; i < m; ++i)
    if (mask >> i & 1) s.push_back(i);
  return s;
}

IndexSet complement(const IndexSet& s, std::size_t m) {
  IndexSet out;
  for (std::size_t i = 0; i < m; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

void require_class(const GradedCoxPresentation& p, std::span<const Integer> l) {
  if (l.size() != p.class_rank()) throw std::invalid_argument("divisor class has the wrong length");
}

// f = prod_{j in J} T_j lies in rad(<T_i : i not in J>) for monomial ideals:
// some generator's support is inside supp(f).
bool monomial_radical_member(const IndexSet& support, const std::vector<IndexSet>& generators) {
  return std::any_of(generators.begin(), generators.end(), [&](const IndexSet& g) {
    return std::includes(support.begin(), support.end(), g.begin(), g.end());
  });
}

void add_member(Bunch& b, const GradedCoxPresentation& p, IndexSet j) {
  std::vector<DivisorClass> tau;
  for (auto i : j) tau.push_back(p.degree(i));
  b.index_sets.push_back(std::move(j));
  b.cones.push_back(std::move(tau));
}

}  // namespace

GradedCoxPresentation::GradedCoxPresentation(IntMatrix degrees, std::vector<DivisorClass> relation_degrees,
                                             std::vector<Polynomial> relations)
    : q_(std::move(degrees)), relation_degrees_(std::move(relation_degrees)), relations_(std::move(relations)) {
  const std::size_t m = q_.cols(), rho = q_.rows();
  if (m == 0) throw std::invalid_argument("presentation: no generators");
  if (rho == 0) throw std::invalid_argument("presentation: class group of rank zero");
  if (relation_degrees_.size() >= m) throw std::invalid_argument("presentation: needs r < m");
  for (const auto& g : relation_degrees_)
    if (g.size() != rho) throw std::invalid_argument("presentation: relation degree has the wrong length");
  auto columns = q_.column_list();
  auto spanned = LatticeBasis::from_generators(rho, columns);
  if (lattice_index(spanned) != Integer(1))
    throw std::invalid_argument("presentation: generator degrees do not generate Z^" + std::to_string(rho));
  if (!relations_.empty()) {
    if (relations_.size() != relation_degrees_.size())
      throw std::invalid_argument("presentation: polynomial count differs from relation count");
    for (std::size_t j = 0; j < relations_.size(); ++j) {
      if (relations_[j].variables() != m)
        throw std::invalid_argument("presentation: relation " + std::to_string(j + 1) + " lives in the wrong ring");
      auto deg = graded_degree(relations_[j], columns);
      if (!deg)
        throw std::invalid_argument("presentation: relation " + std::to_string(j + 1) + " is not homogeneous");
      if (*deg != relation_degrees_[j])
        throw std::invalid_argument("presentation: relation " + std::to_string(j + 1) +
                                    " does not have its declared degree");
    }
  }
}

HCone moving_cone(const GradedCoxPresentation& p) {
  const std::size_t m = p.generator_count();
  HCone mov;
  mov.dimension = p.class_rank();
  bool first = true;
  for (std::size_t j = 0; j < m; ++j) {
    IndexSet others;
    for (std::size_t i = 0; i < m; ++i)
      if (i != j) others.push_back(i);
    HCone c = h_form(cone_of(p, others));
    mov = first ? c : intersect(mov, c);
    first = false;
  }
  return mov;
}

Bunch sigma_bunch(const GradedCoxPresentation& p, std::span<const Integer> l) {
  require_class(p, l);
  const std::size_t m = p.generator_count();
  if (m > kMaxSubsetGenerators) throw std::domain_error("sigma_bunch: too many generators for subset enumeration");
  const std::size_t count = std::size_t{1} << m;
  RatVector target = to_rational(l);
  std::vector<char> member(count, 0);
  parallel_for(count, [&](std::size_t mask) {
    member[mask] = cone_membership(target, cone_of(p, from_mask(mask, m)), false);
  });
  Bunch b;
  b.class_rank = p.class_rank();
  for (std::size_t mask = 0; mask < count; ++mask)
    if (member[mask]) add_member(b, p, from_mask(mask, m));
  return b;
}

Bunch phi_bunch(const GradedCoxPresentation& p, std::span<const Integer> l) {
  Bunch sigma = sigma_bunch(p, l);
  const std::size_t m = p.generator_count();
  if (p.relation_count() > 0 && !p.has_polynomials()) {
    sigma.phi_assumed_maximal = true;
    return sigma;
  }
  std::vector<char> relevant(sigma.index_sets.size(), 0);
  parallel_for(sigma.index_sets.size(), [&](std::size_t k) {
    const IndexSet& j = sigma.index_sets[k];
    IndexSet rest = complement(j, m);
    if (p.relation_count() == 0) {
      std::vector<IndexSet> gens;
      for (auto i : rest) gens.push_back({i});
      relevant[k] = !monomial_radical_member(j, gens);
      return;
    }
    std::vector<Polynomial> gens = p.relations();
    for (auto i : rest) gens.push_back(Polynomial::variable(m, i));
    Monomial prod(m, 0);
    for (auto i : j) prod[i] = 1;
    relevant[k] = !radical_membership(Polynomial::monomial(m, prod), gens);
  });
  Bunch phi;
  phi.class_rank = sigma.class_rank;
  for (std::size_t k = 0; k < sigma.index_sets.size(); ++k)
    if (relevant[k]) add_member(phi, p, sigma.index_sets[k]);
  return phi;
}

Fan ambient_fan(const GradedCoxPresentation& p, std::span<const Integer> l) {
  require_class(p, l);
  const std::size_t m = p.generator_count(), rho = p.class_rank();
  if (m <= rho) throw std::domain_error("ambient_fan: d = m - rho is zero, the rays fail to span");
  const std::size_t d = m - rho;
  RatVector target = to_rational(l);
  if (!moving_cone(p).contains_interior(target))
    throw std::domain_error("ambient_fan: polarization is not in the interior of the moving cone");

  IntMatrix rays = gale_dual(p.degrees());
  if (rays.rows() != d) throw std::logic_error("ambient_fan: Gale dual has the wrong rank");

  std::vector<IndexSet> cones;
  bool wall = false;
  IndexSet j;
  // all rho-subsets J, lexicographic
  std::vector<std::size_t> idx(rho);
  for (std::size_t k = 0; k < rho; ++k) idx[k] = k;
  for (;;) {
    j.assign(idx.begin(), idx.end());
    RationalCone c = cone_of(p, j);
    if (cone_membership(target, c, true)) {
      cones.push_back(complement(j, m));
    } else if (cone_membership(target, c, false)) {
      wall = true;
    }
    std::size_t k = rho;
    while (k > 0 && idx[k - 1] == m - rho + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t t = k; t < rho; ++t) idx[t] = idx[t - 1] + 1;
  }
  if (wall) throw std::domain_error("ambient_fan: non-generic polarization (L lies on a chamber wall)");

  Fan f;
  try {
    f = Fan(std::move(rays), std::move(cones));
  } catch (const std::invalid_argument& e) {
    throw std::domain_error(std::string("ambient_fan: ") + e.what());
  }
  FanProperties props = fan_checks(f);
  if (!props.is_smooth || !props.is_complete)
    throw std::domain_error("ambient_fan: reconstructed fan is not smooth and complete");
  return f;
}

LatticeBasis picard_group(const Bunch& b) {
  if (b.cones.empty()) throw std::domain_error("picard_group: empty bunch");
  LatticeBasis pic = LatticeBasis::from_generators(b.class_rank, b.cones[0]);
  for (std::size_t k = 1; k < b.cones.size(); ++k)
    pic = lattice_intersection(pic, LatticeBasis::from_generators(b.class_rank, b.cones[k]));
  return pic;
}

DivisorClass anticanonical_class(const GradedCoxPresentation& p) {
  DivisorClass l(p.class_rank());
  for (std::size_t i = 0; i < p.generator_count(); ++i)
    for (std::size_t q = 0; q < l.size(); ++q) l[q] += p.degrees()(q, i);
  for (const auto& g : p.relation_degrees())
    for (std::size_t q = 0; q < l.size(); ++q) l[q] -= g[q];
  return l;
}

bool is_locally_factorial(const Bunch& b) {
  return std::all_of(b.cones.begin(), b.cones.end(), [&](const std::vector<DivisorClass>& tau) {
    return lattice_index(LatticeBasis::from_generators(b.class_rank, tau)) == Integer(1);
  });
}

bool units_condition_sufficient(const GradedCoxPresentation& p) {
  std::vector<RatVector> degrees;
  for (const auto& d : p.degree_list()) {
    if (is_zero(d)) return false;
    degrees.push_back(to_rational(d));
  }
  RatVector origin(p.class_rank());
  // a line in the cone is a nontrivial nonnegative relation, i.e. 0 in conv(degrees)
  return !hull_membership(origin, degrees, false);
}

}  // namespace coxcheck
