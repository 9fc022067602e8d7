#include "coxcheck/fans.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace coxcheck {

namespace {

RatMatrix cone_matrix(const Fan& f, const IndexSet& cone) {
  // rows are the ray vectors of the cone
  RatMatrix m(cone.size(), f.dimension());
  for (std::size_t k = 0; k < cone.size(); ++k)
    for (std::size_t q = 0; q < f.dimension(); ++q) m(k, q) = f.rays()(q, cone[k]);
  return m;
}

IndexSet without(const IndexSet& s, std::size_t pos) {
  IndexSet out;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (k != pos) out.push_back(s[k]);
  return out;
}

}  // namespace

Fan::Fan(IntMatrix rays, std::vector<IndexSet> cones) : rays_(std::move(rays)), cones_(std::move(cones)) {
  const std::size_t d = rays_.rows(), m = rays_.cols();
  if (d == 0) throw std::invalid_argument("fan: lattice has dimension zero, rays fail to span");
  for (std::size_t i = 0; i < m; ++i)
    if (!is_primitive(rays_.column(i)))
      throw std::invalid_argument("fan: ray " + std::to_string(i) + " is not primitive");
  if (rank(to_rational(rays_)) != d) throw std::invalid_argument("fan: rays do not span Q^d");
  for (auto& c : cones_) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty()) throw std::invalid_argument("fan: empty maximal cone");
    if (c.back() >= m) throw std::invalid_argument("fan: cone refers to an unknown ray");
  }
}

std::optional<std::size_t> Fan::find_cone(const IndexSet& rays) const {
  IndexSet key = rays;
  std::sort(key.begin(), key.end());
  for (std::size_t s = 0; s < cones_.size(); ++s)
    if (cones_[s] == key) return s;
  return std::nullopt;
}

bool same_fan(const Fan& a, const Fan& b) {
  if (a.dimension() != b.dimension() || a.ray_count() != b.ray_count() ||
      a.cones().size() != b.cones().size())
    return false;
  std::vector<std::size_t> map(a.ray_count());
  for (std::size_t i = 0; i < a.ray_count(); ++i) {
    std::size_t j = 0;
    while (j < b.ray_count() && b.ray(j) != a.ray(i)) ++j;
    if (j == b.ray_count()) return false;
    map[i] = j;
  }
  std::vector<IndexSet> mapped;
  for (const auto& c : a.cones()) {
    IndexSet s;
    for (auto i : c) s.push_back(map[i]);
    std::sort(s.begin(), s.end());
    mapped.push_back(std::move(s));
  }
  auto other = b.cones();
  std::sort(mapped.begin(), mapped.end());
  std::sort(other.begin(), other.end());
  return mapped == other;
}

FanProperties fan_checks(const Fan& f) {
  FanProperties props;
  const std::size_t d = f.dimension();
  props.is_simplicial = std::all_of(f.cones().begin(), f.cones().end(), [&](const IndexSet& c) {
    return c.size() == d && rank(cone_matrix(f, c)) == d;
  });
  if (!props.is_simplicial) return props;
  props.is_smooth = std::all_of(f.cones().begin(), f.cones().end(), [&](const IndexSet& c) {
    Rational det = determinant(cone_matrix(f, c));
    return det == 1 || det == -1;
  });

  // facet -> (cone, omitted ray)
  std::map<IndexSet, std::vector<std::pair<std::size_t, std::size_t>>> facets;
  for (std::size_t s = 0; s < f.cones().size(); ++s)
    for (std::size_t k = 0; k < d; ++k) facets[without(f.cones()[s], k)].emplace_back(s, f.cones()[s][k]);
  std::vector<std::vector<std::size_t>> adjacent(f.cones().size());
  for (const auto& [facet, owners] : facets) {
    if (owners.size() != 2) return props;
    RatVector normal;
    if (facet.empty()) {
      normal = {Rational(1)};
    } else {
      auto ns = nullspace(cone_matrix(f, facet));
      if (ns.size() != 1) return props;
      normal = ns[0];
    }
    Rational s0 = dot(normal, to_rational(f.ray(owners[0].second)));
    Rational s1 = dot(normal, to_rational(f.ray(owners[1].second)));
    if (s0 * s1 >= 0) return props;
    adjacent[owners[0].first].push_back(owners[1].first);
    adjacent[owners[1].first].push_back(owners[0].first);
  }
  if (f.cones().empty()) return props;
  std::vector<bool> seen(f.cones().size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  while (!todo.empty()) {
    auto s = todo.front();
    todo.pop();
    for (auto t : adjacent[s])
      if (!seen[t]) {
        seen[t] = true;
        todo.push(t);
      }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return props;

  RatVector probe(d);
  for (auto i : f.cones()[0])
    for (std::size_t q = 0; q < d; ++q) probe[q] += f.rays()(q, i);
  for (std::size_t s = 1; s < f.cones().size(); ++s) {
    auto coeffs = solve(cone_matrix(f, f.cones()[s]).transpose(), probe);
    if (coeffs && std::all_of(coeffs->begin(), coeffs->end(), [](const Rational& x) { return x >= 0; }))
      return props;
  }
  props.is_complete = true;
  return props;
}

WeightedRays::WeightedRays(RatVector coefficients) : a_(std::move(coefficients)) {
  for (const auto& x : a_)
    if (x <= 0 || x > 1) throw std::domain_error("weighted rays: coefficient " + x.get_str() + " outside (0, 1]");
}

IntMatrix gale_dual(const IntMatrix& p) {
  if (rank(to_rational(p)) != p.rows()) throw std::domain_error("gale_dual: columns do not span");
  auto kernel = integer_kernel(p);
  if (kernel.rank() == 0) return IntMatrix(0, p.cols());
  return IntMatrix::from_rows(p.cols(), kernel.vectors());
}

bool is_gale_pair(const IntMatrix& p, const IntMatrix& q) {
  if (p.cols() != q.cols()) return false;
  IntMatrix prod = p * q.transpose();
  for (std::size_t i = 0; i < prod.rows(); ++i)
    if (!is_zero(prod.row(i))) return false;
  if (rank(to_rational(p)) + rank(to_rational(q)) != p.cols()) return false;
  if (rank(to_rational(q)) != q.rows()) return false;
  return integer_kernel(p).same_lattice(LatticeBasis(q.cols(), q.row_list()));
}

HPolytope moment_polytope(const Fan& f, std::span<const Rational> a) {
  if (a.size() != f.ray_count()) throw std::invalid_argument("moment_polytope: coefficient count");
  HPolytope h;
  h.dimension = f.dimension();
  for (std::size_t i = 0; i < f.ray_count(); ++i) h.halfspaces.push_back({to_rational(f.ray(i)), a[i]});
  return h;
}

std::vector<RatVector> cartier_data(const Fan& f, std::span<const Rational> a) {
  if (a.size() != f.ray_count()) throw std::invalid_argument("cartier_data: coefficient count");
  std::vector<RatVector> out;
  for (const auto& c : f.cones()) {
    RatMatrix m = cone_matrix(f, c);
    if (c.size() != f.dimension() || rank(m) != f.dimension())
      throw std::domain_error("cartier_data: cone is not simplicial of full dimension");
    RatVector rhs;
    for (auto i : c) rhs.push_back(-a[i]);
    auto sol = solve(m, rhs);
    if (!sol) throw std::domain_error("cartier_data: singular cone");
    for (auto i : c)
      if (dot(to_rational(f.ray(i)), *sol) != -a[i]) throw std::logic_error("cartier_data: equality check failed");
    out.push_back(std::move(*sol));
  }
  return out;
}

bool is_ample(const Fan& f, std::span<const Rational> a) {
  auto data = cartier_data(f, a);
  for (std::size_t s = 0; s < f.cones().size(); ++s) {
    const auto& c = f.cones()[s];
    for (std::size_t i = 0; i < f.ray_count(); ++i) {
      if (std::binary_search(c.begin(), c.end(), i)) continue;
      if (dot(to_rational(f.ray(i)), data[s]) + a[i] <= 0) return false;
    }
  }
  return true;
}

Fan normal_fan(const VPolytope& p) {
  HPolytope h = v_to_h(p);
  IntMatrix rays(p.dimension(), h.halfspaces.size());
  for (std::size_t k = 0; k < h.halfspaces.size(); ++k) {
    IntVector n = primitive(h.halfspaces[k].normal);
    for (std::size_t q = 0; q < p.dimension(); ++q) rays(q, k) = n[q];
  }
  std::vector<IndexSet> cones;
  for (const auto& v : p.vertices()) {
    IndexSet c;
    for (std::size_t k = 0; k < h.halfspaces.size(); ++k)
      if (dot(h.halfspaces[k].normal, v) + h.halfspaces[k].offset == 0) c.push_back(k);
    cones.push_back(std::move(c));
  }
  return Fan(std::move(rays), std::move(cones));
}

std::vector<std::size_t> facet_neighbors(const Fan& f, std::size_t sigma) {
  const IndexSet& c = f.cones().at(sigma);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    IndexSet facet = without(c, k);
    std::optional<std::size_t> found;
    for (std::size_t s = 0; s < f.cones().size(); ++s) {
      if (s == sigma) continue;
      const auto& o = f.cones()[s];
      if (std::includes(o.begin(), o.end(), facet.begin(), facet.end())) {
        found = s;
        break;
      }
    }
    if (!found) throw std::domain_error("facet_neighbors: facet without a neighbouring cone");
    out.push_back(*found);
  }
  return out;
}

Homogenisation weighted_homogenisation(const Fan& f, std::span<const Rational> a) {
  const std::size_t d = f.dimension(), m = f.ray_count();
  if (a.size() != m) throw std::invalid_argument("weighted_homogenisation: coefficient count");
  RatMatrix lifted(d + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t q = 0; q < d; ++q) lifted(q, i) = f.rays()(q, i);
    lifted(d, i) = a[i];
  }
  lifted(d, m) = 1;

  IntMatrix q = gale_dual(f.rays());
  const std::size_t rho = q.rows();
  RatMatrix gale(rho, m + 1);
  for (std::size_t k = 0; k < rho; ++k) {
    Rational last = 0;
    for (std::size_t i = 0; i < m; ++i) {
      gale(k, i) = q(k, i);
      last -= a[i] * q(k, i);
    }
    gale(k, m) = last;
  }
  RatMatrix prod = lifted * gale.transpose();
  for (std::size_t i = 0; i < prod.rows(); ++i)
    if (!is_zero(std::span<const Rational>(prod.row(i))))
      throw std::logic_error("weighted_homogenisation: configurations are not orthogonal");
  if (rank(lifted) + rank(gale) != m + 1)
    throw std::logic_error("weighted_homogenisation: ranks do not add up");
  return {{std::move(lifted)}, {std::move(gale)}};
}

}  // namespace coxcheck
