#include "coxcheck/certificate.hpp"

#include <algorithm>

namespace coxcheck {

namespace {

class Checker {
 public:
  explicit Checker(CertificateResult& out) : out_(out) {}
  void expect(bool ok, const std::string& what) {
    ++out_.checked;
    if (!ok) out_.failures.push_back(what);
  }

 private:
  CertificateResult& out_;
};

Rational column_dot(const IntMatrix& m, std::size_t col, std::span<const Rational> x) {
  Rational s = 0;
  for (std::size_t q = 0; q < m.rows(); ++q) s += m(q, col) * x[q];
  return s;
}

}  // namespace

CertificateResult check_certificate(const MukaiReport& r) {
  CertificateResult out;
  Checker c(out);

  c.expect(r.n + r.rho + r.r == r.m, "n + rho_X = m - r");
  c.expect(r.d + r.rho == r.m, "d = m - rho");
  c.expect(r.degrees.cols() == r.m && r.degrees.rows() == r.rho, "degree matrix shape");
  if (r.degrees.cols() != r.m || r.degrees.rows() != r.rho) return out;

  DivisorClass kz(r.rho), kx(r.rho);
  for (std::size_t i = 0; i < r.m; ++i)
    for (std::size_t q = 0; q < r.rho; ++q) kz[q] += r.degrees(q, i);
  kx = kz;
  for (const auto& g : r.relation_degrees)
    for (std::size_t q = 0; q < r.rho && q < g.size(); ++q) kx[q] -= g[q];
  c.expect(kz == r.ambient_anticanonical, "[-K_Z] = sum deg(T_i)");
  c.expect(kx == r.anticanonical, "[-K_X] = [-K_Z] - sum deg(g_j)");
  if (!r.computed) return out;
  if (!r.ambient) {
    c.expect(false, "certificate without an ambient fan");
    return out;
  }
  const Fan& f = *r.ambient;
  const std::size_t d = f.dimension(), m = r.m;
  c.expect(f.ray_count() == m && d == r.d, "ambient fan shape");
  c.expect(r.a.size() == m, "representative length");
  c.expect(r.cartier.size() == f.cones().size(), "one Cartier vector per maximal cone");
  c.expect(r.weights.size() == f.cones().size(), "one weight per maximal cone");
  c.expect(r.forms.size() == r.bounds.size(), "one extraction form per bound");
  if (!out.ok()) return out;

  // P Q^T = 0
  for (std::size_t q = 0; q < r.rho; ++q)
    for (std::size_t k = 0; k < d; ++k) {
      Integer s = 0;
      for (std::size_t i = 0; i < m; ++i) s += f.rays()(k, i) * r.degrees(q, i);
      c.expect(s == 0, "rays and degrees are orthogonal");
    }

  // [-K_X] = i_X H with H in Pic
  const Rational i(r.fano_index);
  c.expect(r.fano_index > 0, "i_X positive");
  for (std::size_t q = 0; q < r.rho; ++q)
    c.expect(r.anticanonical[q] == r.fano_index * r.hyperplane[q], "[-K_X] = i_X H");
  c.expect(r.hyperplane_coordinates.size() == r.picard_basis.size(), "H coordinate count");
  if (r.hyperplane_coordinates.size() == r.picard_basis.size()) {
    DivisorClass h(r.rho);
    for (std::size_t k = 0; k < r.picard_basis.size(); ++k)
      for (std::size_t q = 0; q < r.rho; ++q) h[q] += r.hyperplane_coordinates[k] * r.picard_basis[k][q];
    c.expect(h == r.hyperplane, "H is an integer combination of the Pic basis");
  }

  // Q a = [-K_X], 0 < a <= 1, sum a <= m - r
  Rational sum = 0;
  for (const auto& x : r.a) {
    c.expect(x > 0 && x <= 1, "a_v in (0, 1]");
    sum += x;
  }
  c.expect(sum == r.a_sum, "stored coefficient sum");
  c.expect(sum <= Rational(static_cast<long>(m - r.r)), "sum a <= m - r");
  for (std::size_t q = 0; q < r.rho; ++q) {
    Rational s = 0;
    for (std::size_t v = 0; v < m; ++v) s += r.degrees(q, v) * r.a[v];
    c.expect(s == r.anticanonical[q], "Q a = [-K_X]");
  }

  // Cartier equalities and bound values
  auto pairing = [&](std::size_t v, const RatVector& y) {
    Rational s = 0;
    for (std::size_t k = 0; k < d; ++k) s += f.rays()(k, v) * y[k];
    return s;
  };
  std::size_t expected_bounds = 0;
  for (std::size_t s = 0; s < f.cones().size(); ++s) {
    const auto& cone = f.cones()[s];
    c.expect(r.cartier[s].size() == d, "Cartier vector length");
    if (r.cartier[s].size() != d) return out;
    for (std::size_t v = 0; v < m; ++v) {
      bool inside = std::binary_search(cone.begin(), cone.end(), v);
      if (inside) {
        c.expect(pairing(v, r.cartier[s]) == -r.a[v], "<w, C_sigma> = -a_w on the rays of sigma");
      } else {
        ++expected_bounds;
      }
    }
  }
  c.expect(expected_bounds == r.bounds.size(), "one bound per (sigma, v) with v outside sigma");
  Rational minimum;
  for (std::size_t k = 0; k < r.bounds.size(); ++k) {
    const auto& b = r.bounds[k];
    c.expect(b.cone < f.cones().size() && b.ray < m, "bound indices");
    if (b.cone >= f.cones().size() || b.ray >= m) return out;
    const auto& cone = f.cones()[b.cone];
    c.expect(!std::binary_search(cone.begin(), cone.end(), b.ray), "bound ray lies outside its cone");
    Rational value = pairing(b.ray, r.cartier[b.cone]) + r.a[b.ray];
    c.expect(value == b.value, "bound value <v, C_sigma> + a_v");
    c.expect(value > 0, "bound value positive");
    c.expect(i <= value, "i_X <= <v, C_sigma> + a_v");
    if (k == 0 || value < minimum) minimum = value;

    // extraction form
    const auto& e = r.forms[k];
    c.expect(e.cone == b.cone && e.ray == b.ray, "form matches its bound");
    c.expect(e.gale_values.size() == m && e.form.size() == r.rho, "form shape");
    if (e.gale_values.size() != m || e.form.size() != r.rho) return out;
    for (std::size_t u = 0; u < m; ++u) {
      c.expect(column_dot(r.degrees, u, e.form) == e.gale_values[u], "l(u^) matches the stored value");
      bool in_sigma = std::binary_search(cone.begin(), cone.end(), u);
      if (u == b.ray) {
        c.expect(e.gale_values[u] == 1, "l(v^) = 1");
      } else if (!in_sigma) {
        c.expect(e.gale_values[u] == 0, "l(u^) = 0 outside sigma and v");
      }
    }
    for (std::size_t q = 0; q < d; ++q) {
      Rational s = 0;
      for (std::size_t u = 0; u < m; ++u) s += e.gale_values[u] * f.rays()(q, u);
      c.expect(s == 0, "v + sum lambda_w w = 0");
    }
    Rational lk = 0;
    for (std::size_t q = 0; q < r.rho; ++q) lk += e.form[q] * r.anticanonical[q];
    c.expect(lk == b.value, "l([-K_X]) = <v, C_sigma> + a_v");
    for (const auto& basis : r.picard_basis) {
      Rational s = 0;
      for (std::size_t q = 0; q < r.rho; ++q) s += e.form[q] * basis[q];
      c.expect(s.get_den() == 1, "l integral on Pic(X)");
    }
    Rational lh = 0;
    for (std::size_t q = 0; q < r.rho; ++q) lh += e.form[q] * r.hyperplane[q];
    c.expect(lh.get_den() == 1 && lk == i * lh, "l([-K_X]) in i_X Z");
  }
  if (!r.bounds.empty()) c.expect(minimum == r.min_bound, "stored minimum bound");

  // barycentric relation
  Rational mass = 0;
  RatVector total(d);
  for (std::size_t s = 0; s < r.weights.size(); ++s) {
    c.expect(r.weights[s] >= 0 && r.weights[s] <= 1, "0 <= m_sigma <= 1");
    mass += r.weights[s];
    for (std::size_t q = 0; q < d; ++q) total[q] += r.weights[s] * r.cartier[s][q];
  }
  c.expect(mass == 1, "sum m_sigma = 1");
  c.expect(std::all_of(total.begin(), total.end(), [](const Rational& x) { return x == 0; }),
           "sum m_sigma C_sigma = 0");

  // summation chain, term by term
  Rational chain_lhs = 0, chain_rhs = 0;
  for (std::size_t v = 0; v < m; ++v) {
    Rational containing = 0, pairing_sum = 0, lower = 0;
    for (std::size_t s = 0; s < f.cones().size(); ++s) {
      const auto& cone = f.cones()[s];
      pairing_sum += r.weights[s] * pairing(v, r.cartier[s]);
      if (std::binary_search(cone.begin(), cone.end(), v)) {
        containing += r.weights[s];
        lower -= r.a[v] * r.weights[s];
      } else {
        lower += (i - r.a[v]) * r.weights[s];
      }
    }
    c.expect(pairing_sum == 0, "sum m_sigma <C_sigma, v> = 0");
    c.expect(pairing_sum >= lower, "weighted pairing bounded below via i_X <= bound");
    c.expect(i - r.a[v] <= i * containing, "i_X - a_v <= i_X sum_{sigma ∋ v} m_sigma");
    chain_lhs += i - r.a[v];
    chain_rhs += i * containing;
  }
  Rational cone_mass = 0;
  for (std::size_t s = 0; s < f.cones().size(); ++s)
    cone_mass += r.weights[s] * static_cast<long>(f.cones()[s].size());
  c.expect(cone_mass == Rational(static_cast<long>(d)), "sum m_sigma |sigma| = d");
  c.expect(chain_lhs <= chain_rhs, "i_X m - sum a <= i_X d");
  c.expect(i * Rational(static_cast<long>(r.rho)) <= sum, "i_X rho_X <= sum a");

  const Integer lhs = (r.fano_index - 1) * static_cast<unsigned long>(r.rho);
  c.expect(lhs == r.lhs, "(i_X - 1) rho_X");
  c.expect(r.inequality_holds == (lhs <= static_cast<unsigned long>(r.n)), "inequality verdict");
  c.expect(r.gamma == Rational(static_cast<long>(r.n + r.rho)) - sum, "gamma = n + rho - sum a");
  c.expect(r.gamma >= 0, "gamma >= 0");
  c.expect(r.equality == (lhs == static_cast<unsigned long>(r.n)), "equality flag");
  if (r.factors) {
    std::size_t total_dim = 0;
    for (auto k : *r.factors) {
      c.expect(Integer(static_cast<unsigned long>(k)) == r.fano_index - 1, "factor dimension i_X - 1");
      total_dim += k;
    }
    c.expect(r.factors->size() == r.rho, "rho_X factors");
    c.expect(total_dim == r.n, "factor dimensions add up to n");
  }
  return out;
}

}  // namespace coxcheck
