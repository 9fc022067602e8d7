#pragma once

// Random inputs for the property suites, all driven by std::mt19937.

#include "coxcheck/fans.hpp"
#include "coxcheck/groebner.hpp"
#include "coxcheck/polyhedra.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace gen {

using namespace coxcheck;

inline long uniform(std::mt19937& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// P^d: rays e_1..e_d, -sum e_i.
inline Fan projective_space(std::size_t d) {
  IntMatrix rays(d, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    rays(i, i) = 1;
    rays(i, d) = -1;
  }
  std::vector<IndexSet> cones;
  for (std::size_t skip = 0; skip <= d; ++skip) {
    IndexSet c;
    for (std::size_t i = 0; i <= d; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(c);
  }
  return Fan(rays, cones);
}

/// Product of two fans.
inline Fan product(const Fan& a, const Fan& b) {
  const std::size_t d = a.dimension() + b.dimension();
  IntMatrix rays(d, a.ray_count() + b.ray_count());
  for (std::size_t j = 0; j < a.ray_count(); ++j)
    for (std::size_t i = 0; i < a.dimension(); ++i) rays(i, j) = a.rays()(i, j);
  for (std::size_t j = 0; j < b.ray_count(); ++j)
    for (std::size_t i = 0; i < b.dimension(); ++i) rays(a.dimension() + i, a.ray_count() + j) = b.rays()(i, j);
  std::vector<IndexSet> cones;
  for (const auto& s : a.cones())
    for (const auto& t : b.cones()) {
      IndexSet c = s;
      for (auto k : t) c.push_back(a.ray_count() + k);
      cones.push_back(c);
    }
  return Fan(rays, cones);
}

struct AmplePair {
  Fan fan;
  RatVector a;  ///< ample, entries in (0, 1]
};

/// Star subdivision of the 2-face {i, j}: new ray v_i + v_j. Smooth and
/// complete stay smooth and complete.
inline Fan blow_up(const Fan& f, std::size_t i, std::size_t j) {
  const std::size_t m = f.ray_count();
  IntMatrix rays(f.dimension(), m + 1);
  for (std::size_t r = 0; r < f.dimension(); ++r) {
    for (std::size_t c = 0; c < m; ++c) rays(r, c) = f.rays()(r, c);
    rays(r, m) = f.rays()(r, i) + f.rays()(r, j);
  }
  std::vector<IndexSet> cones;
  for (const auto& c : f.cones()) {
    bool has_i = std::binary_search(c.begin(), c.end(), i), has_j = std::binary_search(c.begin(), c.end(), j);
    if (!(has_i && has_j)) {
      cones.push_back(c);
      continue;
    }
    for (auto drop : {i, j}) {
      IndexSet s;
      for (auto k : c)
        if (k != drop) s.push_back(k);
      s.push_back(m);
      std::sort(s.begin(), s.end());
      cones.push_back(s);
    }
  }
  return Fan(rays, cones);
}

/// Random smooth complete fan of dimension d <= 3 with an ample weighting:
/// start from P^d, P^1 x P^1, P^1 x P^2 or (P^1)^3 and blow up random 2-faces,
/// taking N * (pullback) - (exceptional divisor) with N doubled until ample.
inline AmplePair random_smooth_complete(std::mt19937& rng, std::size_t d, std::size_t max_blowups) {
  Fan f = projective_space(d);
  if (d == 2 && uniform(rng, 0, 1)) f = product(projective_space(1), projective_space(1));
  if (d == 3) {
    switch (uniform(rng, 0, 2)) {
      case 1: f = product(projective_space(1), projective_space(2)); break;
      case 2: f = product(product(projective_space(1), projective_space(1)), projective_space(1)); break;
      default: break;
    }
  }
  RatVector a(f.ray_count(), Rational(1));
  const std::size_t steps = d == 1 ? 0 : static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_blowups)));
  for (std::size_t s = 0; s < steps; ++s) {
    const auto& cone = f.cones()[uniform(rng, 0, static_cast<long>(f.cones().size()) - 1)];
    std::size_t p = uniform(rng, 0, static_cast<long>(d) - 1), q = uniform(rng, 0, static_cast<long>(d) - 2);
    if (q >= p) ++q;
    std::size_t i = cone[p], j = cone[q];
    Fan g = blow_up(f, i, j);
    for (Rational n = 2;; n *= 2) {
      RatVector b(a.size() + 1);
      for (std::size_t k = 0; k < a.size(); ++k) b[k] = n * a[k];
      b.back() = n * (a[i] + a[j]) - 1;
      if (b.back() > 0 && is_ample(g, b)) {
        a = std::move(b);
        break;
      }
    }
    f = std::move(g);
  }
  Rational top = *std::max_element(a.begin(), a.end());
  for (auto& x : a) x /= top;
  return {f, a};
}

/// Random bounded H-polytope in dimension d: a cross-polytope-like box so the
/// result is bounded, plus random cuts keeping the origin inside.
inline HPolytope random_hpolytope(std::mt19937& rng, std::size_t d, std::size_t facets) {
  HPolytope h;
  h.dimension = d;
  for (std::size_t i = 0; i < d; ++i) {
    for (int sign : {1, -1}) {
      RatVector n(d);
      n[i] = sign;
      h.halfspaces.push_back({n, Rational(uniform(rng, 1, 4))});
    }
  }
  while (h.halfspaces.size() < facets) {
    RatVector n(d);
    bool nonzero = false;
    for (auto& x : n) {
      x = uniform(rng, -3, 3);
      nonzero = nonzero || x != 0;
    }
    if (!nonzero) continue;
    h.halfspaces.push_back({n, Rational(uniform(rng, 0, 5)) / uniform(rng, 1, 2)});
  }
  return h;
}

/// Random monomial with exponents in 0..max_exp.
inline Monomial random_monomial(std::mt19937& rng, std::size_t vars, unsigned max_exp, unsigned density_percent) {
  Monomial m(vars);
  for (auto& e : m)
    if (uniform(rng, 0, 99) < density_percent) e = static_cast<unsigned>(uniform(rng, 1, max_exp));
  return m;
}

/// Random degree matrix with m columns in Z^rho whose columns generate the
/// lattice: the identity block is always included.
inline IntMatrix random_degrees(std::mt19937& rng, std::size_t rho, std::size_t m) {
  IntMatrix q(rho, m);
  for (std::size_t i = 0; i < rho; ++i) q(i, i) = 1;
  for (std::size_t j = rho; j < m; ++j)
    for (std::size_t i = 0; i < rho; ++i) q(i, j) = uniform(rng, 0, 3);
  return q;
}

}  // namespace gen
