#include "coxcheck/polyhedra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace coxcheck {

namespace {

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
// Stops early if f returns false.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!f(std::as_const(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool lex_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string format_vector(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

RatMatrix rows_matrix(std::size_t cols, const std::vector<RatVector>& rows) {
  return RatMatrix::from_rows(cols, rows);
}

}  // namespace

// ---------------------------------------------------------------------------

bool HPolytope::contains(std::span<const Rational> y) const {
  for (const auto& h : halfspaces)
    if (dot(h.normal, y) + h.offset < 0) return false;
  return true;
}

bool HPolytope::is_bounded() const {
  // variables: y (free), s (slack >= 0);  <n_i, y> - s_i = -offset_i
  const std::size_t d = dimension, k = halfspaces.size();
  LPProblem p = LPProblem::nonnegative(d + k);
  for (std::size_t j = 0; j < d; ++j) p.lower[j] = std::nullopt;
  for (std::size_t i = 0; i < k; ++i) {
    RatVector row(d + k);
    for (std::size_t j = 0; j < d; ++j) row[j] = halfspaces[i].normal[j];
    row[d + i] = -1;
    p.add_row(row, -halfspaces[i].offset);
  }
  for (std::size_t j = 0; j < d; ++j)
    for (int s : {1, -1}) {
      std::fill(p.c.begin(), p.c.end(), Rational(0));
      p.c[j] = s;
      if (lp_solve(p).status != LPStatus::optimal) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------

VPolytope::VPolytope(std::size_t dimension, std::vector<RatVector> vertices)
    : dimension_(dimension), vertices_(std::move(vertices)) {
  for (const auto& v : vertices_)
    if (v.size() != dimension_) throw std::invalid_argument("VPolytope: wrong vertex length");
}

VPolytope VPolytope::hull(std::size_t dimension, std::span<const RatVector> points) {
  std::vector<RatVector> unique;
  for (const auto& p : points)
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(p);
  std::vector<RatVector> kept;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    std::vector<RatVector> others;
    for (std::size_t j = 0; j < unique.size(); ++j)
      if (j != i) others.push_back(unique[j]);
    if (!hull_membership(unique[i], others, false)) kept.push_back(unique[i]);
  }
  return VPolytope(dimension, std::move(kept));
}

bool VPolytope::contains(std::span<const Rational> y) const {
  return hull_membership(y, vertices_, false);
}

bool same_vertices(const VPolytope& a, const VPolytope& b) {
  if (a.dimension() != b.dimension()) return false;
  auto va = a.vertices(), vb = b.vertices();
  std::sort(va.begin(), va.end(), lex_less);
  std::sort(vb.begin(), vb.end(), lex_less);
  return va == vb;
}

// ---------------------------------------------------------------------------
// Double description on the homogenised cone {(y, t) : <n, y> + offset t >= 0, t >= 0}.

namespace {

struct DDRay {
  IntVector z;
  std::vector<bool> zeros;  // constraint indices tight at z (among processed)
};

IntVector scale_row(const HalfSpace& h) {
  RatVector row = h.normal;
  row.push_back(h.offset);
  if (is_zero(std::span<const Rational>(row))) return IntVector(row.size());
  return primitive(row);
}

bool lp_feasible(const HPolytope& h) {
  const std::size_t d = h.dimension, k = h.halfspaces.size();
  LPProblem p = LPProblem::nonnegative(d + k);
  for (std::size_t j = 0; j < d; ++j) p.lower[j] = std::nullopt;
  for (std::size_t i = 0; i < k; ++i) {
    RatVector row(d + k);
    for (std::size_t j = 0; j < d; ++j) row[j] = h.halfspaces[i].normal[j];
    row[d + i] = -1;
    p.add_row(row, -h.halfspaces[i].offset);
  }
  return lp_solve(p).status == LPStatus::optimal;
}

}  // namespace

VertexEnumeration dual_description(const HPolytope& h) {
  const std::size_t d = h.dimension;
  std::vector<IntVector> rows;
  for (const auto& hs : h.halfspaces) {
    if (hs.normal.size() != d) throw std::invalid_argument("dual_description: wrong normal length");
    rows.push_back(scale_row(hs));
  }
  IntVector t_row(d + 1);
  t_row[d] = 1;
  rows.push_back(t_row);
  const std::size_t nrows = rows.size();

  VertexEnumeration out;
  IntMatrix a = IntMatrix::from_rows(d + 1, rows);
  if (rank(to_rational(a)) < d + 1) {
    // Nontrivial lineality: either empty or containing a line.
    out.status = lp_feasible(h) ? PolytopeStatus::unbounded : PolytopeStatus::empty;
    return out;
  }

  // Initial simplicial cone from the first d+1 independent rows.
  std::vector<std::size_t> initial;
  std::vector<RatVector> chosen;
  for (std::size_t i = 0; i < nrows && initial.size() < d + 1; ++i) {
    chosen.push_back(to_rational(rows[i]));
    if (rank(rows_matrix(d + 1, chosen)) == chosen.size()) {
      initial.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  std::vector<bool> processed(nrows, false);
  for (auto i : initial) processed[i] = true;

  std::vector<DDRay> rays;
  RatMatrix a0 = rows_matrix(d + 1, chosen);
  for (std::size_t k = 0; k <= d; ++k) {
    RatVector e(d + 1);
    e[k] = 1;
    auto col = solve(a0, e);  // a0 * col = e_k
    DDRay r;
    r.z = primitive(*col);
    r.zeros.assign(nrows, false);
    for (std::size_t q = 0; q <= d; ++q)
      if (q != k) r.zeros[initial[q]] = true;
    rays.push_back(std::move(r));
  }

  for (std::size_t c = 0; c < nrows; ++c) {
    if (processed[c]) continue;
    std::vector<Integer> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) val[i] = dot(rows[c], rays[i].z);
    std::vector<DDRay> next;
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] > 0) pos.push_back(i);
      if (val[i] < 0) neg.push_back(i);
      if (val[i] >= 0) {
        DDRay r = rays[i];
        if (val[i] == 0) r.zeros[c] = true;
        next.push_back(std::move(r));
      }
    }
    for (auto ip : pos)
      for (auto in : neg) {
        std::vector<bool> common(nrows, false);
        std::size_t count = 0;
        for (std::size_t q = 0; q < nrows; ++q)
          if (rays[ip].zeros[q] && rays[in].zeros[q]) {
            common[q] = true;
            ++count;
          }
        if (count + 2 < d + 1) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == ip || o == in) continue;
          bool superset = true;
          for (std::size_t q = 0; q < nrows && superset; ++q)
            if (common[q] && !rays[o].zeros[q]) superset = false;
          if (superset) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector z(d + 1);
        for (std::size_t q = 0; q <= d; ++q) z[q] = val[ip] * rays[in].z[q] - val[in] * rays[ip].z[q];
        Integer g = gcd(z);
        for (auto& x : z) x /= g;
        common[c] = true;
        next.push_back({std::move(z), std::move(common)});
      }
    processed[c] = true;
    rays = std::move(next);
  }

  std::vector<RatVector> vertices;
  bool recession = false;
  for (const auto& r : rays) {
    if (r.z[d] == 0) {
      recession = true;
      continue;
    }
    RatVector y(d);
    for (std::size_t q = 0; q < d; ++q) y[q] = Rational(r.z[q], r.z[d]);
    for (auto& x : y) x.canonicalize();
    if (std::find(vertices.begin(), vertices.end(), y) == vertices.end()) vertices.push_back(y);
  }
  if (vertices.empty()) {
    out.status = PolytopeStatus::empty;
  } else if (recession) {
    out.status = PolytopeStatus::unbounded;
  } else {
    std::sort(vertices.begin(), vertices.end(), lex_less);
    out.polytope = VPolytope(d, std::move(vertices));
  }
  return out;
}

HPolytope v_to_h(const VPolytope& v) {
  const std::size_t d = v.dimension();
  const auto& verts = v.vertices();
  if (verts.empty()) throw std::domain_error("v_to_h: empty polytope");
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    RatVector w(d);
    for (std::size_t q = 0; q < d; ++q) w[q] = verts[i][q] - verts[0][q];
    diffs.push_back(std::move(w));
  }
  if (diffs.empty() ? d != 0 : rank(rows_matrix(d, diffs)) != d)
    throw std::domain_error("v_to_h: polytope is not full-dimensional");

  HPolytope h;
  h.dimension = d;
  if (d == 0) return h;
  for_each_subset(verts.size(), d, [&](const std::vector<std::size_t>& s) {
    std::vector<RatVector> span_rows;
    for (std::size_t k = 1; k < s.size(); ++k) {
      RatVector w(d);
      for (std::size_t q = 0; q < d; ++q) w[q] = verts[s[k]][q] - verts[s[0]][q];
      span_rows.push_back(std::move(w));
    }
    RatVector normal;
    if (span_rows.empty()) {
      normal = {Rational(1)};  // d == 1
    } else {
      auto ns = nullspace(rows_matrix(d, span_rows));
      if (ns.size() != 1) return true;
      normal = ns[0];
    }
    Rational offset = -dot(normal, verts[s[0]]);
    bool any_pos = false, any_neg = false;
    for (const auto& p : verts) {
      Rational val = dot(normal, p) + offset;
      if (val > 0) any_pos = true;
      if (val < 0) any_neg = true;
    }
    if (any_pos && any_neg) return true;
    if (any_neg) {
      for (auto& x : normal) x = -x;
      offset = -offset;
    }
    IntVector prim = primitive(normal);
    std::size_t k = 0;
    while (normal[k] == 0) ++k;
    Rational scale = Rational(prim[k]) / normal[k];
    HalfSpace hs{to_rational(prim), offset * scale};
    for (const auto& existing : h.halfspaces)
      if (existing.normal == hs.normal && existing.offset == hs.offset) return true;
    h.halfspaces.push_back(std::move(hs));
    return true;
  });
  return h;
}

VPolytope polar_dual(const VPolytope& p) {
  HPolytope facets = v_to_h(p);
  for (const auto& f : facets.halfspaces) {
    if (f.offset > 0) continue;
    std::ostringstream os;
    os << "polar_dual: origin is not interior; facet with normal " << format_vector(f.normal)
       << " through vertices";
    for (const auto& v : p.vertices())
      if (dot(f.normal, v) + f.offset == 0) os << ' ' << format_vector(v);
    throw std::domain_error(os.str());
  }
  HPolytope polar;
  polar.dimension = p.dimension();
  for (const auto& c : p.vertices()) polar.halfspaces.push_back({c, Rational(1)});
  auto en = dual_description(polar);
  if (en.status != PolytopeStatus::ok) throw std::logic_error("polar_dual: polar is not a polytope");
  return en.polytope;
}

// ---------------------------------------------------------------------------

std::optional<RatVector> convex_combination(std::span<const Rational> x,
                                            std::span<const RatVector> points) {
  const std::size_t k = points.size(), d = x.size();
  if (k == 0) return std::nullopt;
  LPProblem p = LPProblem::nonnegative(k);
  for (std::size_t q = 0; q < d; ++q) {
    RatVector row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = points[i][q];
    p.add_row(row, x[q]);
  }
  p.add_row(RatVector(k, Rational(1)), Rational(1));
  auto res = lp_solve(p);
  if (res.status != LPStatus::optimal) return std::nullopt;
  return res.x;
}

bool hull_membership(std::span<const Rational> x, std::span<const RatVector> points,
                     bool include_origin) {
  if (!include_origin) return convex_combination(x, points).has_value();
  if (is_zero(x)) return true;
  // sum w_i p_i = x, sum w_i + slack = 1
  const std::size_t k = points.size(), d = x.size();
  if (k == 0) return false;
  LPProblem p = LPProblem::nonnegative(k + 1);
  for (std::size_t q = 0; q < d; ++q) {
    RatVector row(k + 1);
    for (std::size_t i = 0; i < k; ++i) row[i] = points[i][q];
    p.add_row(row, x[q]);
  }
  p.add_row(RatVector(k + 1, Rational(1)), Rational(1));
  return lp_solve(p).status == LPStatus::optimal;
}

bool cone_membership(std::span<const Rational> x, const RationalCone& c, bool interior) {
  const std::size_t k = c.generators.size(), d = c.dimension;
  if (x.size() != d) throw std::invalid_argument("cone_membership: wrong vector length");
  if (k == 0) return interior ? d == 0 : is_zero(x);
  if (!interior) {
    LPProblem p = LPProblem::nonnegative(k);
    for (std::size_t q = 0; q < d; ++q) {
      RatVector row(k);
      for (std::size_t i = 0; i < k; ++i) row[i] = c.generators[i][q];
      p.add_row(row, x[q]);
    }
    return lp_solve(p).status == LPStatus::optimal;
  }
  if (rank(rows_matrix(d, c.generators)) != d) return false;
  // x = sum (t + mu_i) g_i with mu >= 0, 0 <= t <= 1; interior iff max t > 0
  LPProblem p = LPProblem::nonnegative(k + 1);
  p.upper[k] = Rational(1);
  p.c[k] = -1;
  for (std::size_t q = 0; q < d; ++q) {
    RatVector row(k + 1);
    for (std::size_t i = 0; i < k; ++i) {
      row[i] = c.generators[i][q];
      row[k] += c.generators[i][q];
    }
    p.add_row(row, x[q]);
  }
  auto res = lp_solve(p);
  return res.status == LPStatus::optimal && res.objective < 0;
}

bool HCone::contains(std::span<const Rational> x) const {
  for (const auto& e : equalities)
    if (dot(to_rational(e), x) != 0) return false;
  for (const auto& n : inequalities)
    if (dot(to_rational(n), x) < 0) return false;
  return true;
}

bool HCone::contains_interior(std::span<const Rational> x) const {
  if (!equalities.empty()) return false;
  for (const auto& n : inequalities)
    if (dot(to_rational(n), x) <= 0) return false;
  return true;
}

namespace {

void push_unique(std::vector<IntVector>& list, IntVector v) {
  if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(std::move(v));
}

}  // namespace

HCone h_form(const RationalCone& c) {
  const std::size_t d = c.dimension;
  HCone h;
  h.dimension = d;
  std::vector<RatVector> gens;
  for (const auto& g : c.generators)
    if (!is_zero(std::span<const Rational>(g))) gens.push_back(g);
  std::vector<RatVector> eqs;
  if (gens.empty()) {
    for (std::size_t q = 0; q < d; ++q) {
      IntVector e(d);
      e[q] = 1;
      h.equalities.push_back(e);
    }
    return h;
  }
  eqs = nullspace(rows_matrix(d, gens));
  for (const auto& e : eqs) h.equalities.push_back(primitive(e));
  const std::size_t r = d - eqs.size();
  for_each_subset(gens.size(), r - 1, [&](const std::vector<std::size_t>& s) {
    std::vector<RatVector> rows = eqs;
    for (auto i : s) rows.push_back(gens[i]);
    std::vector<RatVector> ns;
    if (rows.empty()) {
      // a ray in Q^1: the facet normal is the whole space
      if (d == 1) ns.push_back(RatVector{1});
    } else {
      ns = nullspace(rows_matrix(d, rows));
    }
    if (ns.size() != 1) return true;
    bool any_pos = false, any_neg = false;
    for (const auto& g : gens) {
      Rational v = dot(ns[0], g);
      if (v > 0) any_pos = true;
      if (v < 0) any_neg = true;
    }
    if (any_pos && any_neg) return true;
    if (any_neg)
      for (auto& x : ns[0]) x = -x;
    push_unique(h.inequalities, primitive(ns[0]));
    return true;
  });
  return h;
}

HCone intersect(const HCone& a, const HCone& b) {
  if (a.dimension != b.dimension) throw std::invalid_argument("intersect: dimension mismatch");
  HCone h = a;
  for (const auto& n : b.inequalities) push_unique(h.inequalities, n);
  for (const auto& e : b.equalities) push_unique(h.equalities, e);
  return h;
}

std::vector<IntVector> HCone::extreme_rays() const {
  const std::size_t d = dimension;
  std::vector<RatVector> eqs;
  for (const auto& e : equalities) eqs.push_back(to_rational(e));
  std::vector<RatVector> all = eqs;
  for (const auto& n : inequalities) all.push_back(to_rational(n));
  if (all.empty() ? d != 0 : rank(rows_matrix(d, all)) != d)
    throw std::domain_error("extreme_rays: cone is not pointed");
  const std::size_t eq_rank = eqs.empty() ? 0 : rank(rows_matrix(d, eqs));
  const std::size_t dim = d - eq_rank;
  std::vector<IntVector> rays;
  if (dim == 0) return rays;
  for_each_subset(inequalities.size(), dim - 1, [&](const std::vector<std::size_t>& s) {
    std::vector<RatVector> rows = eqs;
    for (auto i : s) rows.push_back(to_rational(inequalities[i]));
    RatVector dir;
    if (rows.empty()) {
      dir = {Rational(1)};
    } else {
      auto ns = nullspace(rows_matrix(d, rows));
      if (ns.size() != 1) return true;
      dir = ns[0];
    }
    for (int sgn : {1, -1}) {
      RatVector cand = dir;
      if (sgn < 0)
        for (auto& x : cand) x = -x;
      if (contains(cand)) push_unique(rays, primitive(cand));
    }
    return true;
  });
  return rays;
}

}  // namespace coxcheck
