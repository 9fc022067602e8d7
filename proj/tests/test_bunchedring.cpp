#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxcheck/bunchedring.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <set>

using namespace coxcheck;

namespace {

IntMatrix p3p3_degrees() {
  IntMatrix q(2, 8);
  for (int i = 0; i < 8; ++i) q(i % 2 == 0 ? 1 : 0, i) = 1;
  return q;
}

GradedCoxPresentation p3p3_one() {
  return GradedCoxPresentation(p3p3_degrees(), {{1, 1}}, {parse_polynomial("T1*T2+T3*T4+T5*T6+T7*T8", 8)});
}

GradedCoxPresentation toric(const IntMatrix& q) { return GradedCoxPresentation(q, {}); }

// L in the interior of cone(deg T_i, deg T_j) for rank-2 gradings.
bool interior_of_pair(const IntMatrix& q, std::size_t i, std::size_t j, const IntVector& l) {
  auto x = oracle::solve_square({{Rational(q(0, i)), Rational(q(0, j))}, {Rational(q(1, i)), Rational(q(1, j))}},
                                {Rational(l[0]), Rational(l[1])});
  return x && (*x)[0] > 0 && (*x)[1] > 0;
}

}  // namespace

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(GradedCoxPresentation(IntMatrix{{2, 2}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(GradedCoxPresentation(IntMatrix{{1, 1}}, {{1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(GradedCoxPresentation(p3p3_degrees(), {{1, 0}}, {parse_polynomial("T1*T2", 8)}),
                  std::invalid_argument);
  CHECK_NOTHROW(p3p3_one());
}

TEST_CASE("moving cone") {
  auto mov = moving_cone(toric(p3p3_degrees()));
  auto rays = mov.extreme_rays();
  std::set<IntVector> got(rays.begin(), rays.end());
  CHECK(got == std::set<IntVector>{{1, 0}, {0, 1}});

  auto pn = moving_cone(toric(IntMatrix{{1, 1, 1}}));
  CHECK(pn.contains_interior(RatVector{1}));
  CHECK_FALSE(pn.contains(RatVector{-1}));

  SUBCASE("blow-up of P2: proper subcone of the effective cone") {
    IntMatrix q = gale_dual(IntMatrix{{1, 0, -1, 1}, {0, 1, -1, 1}});
    auto m = moving_cone(toric(q));
    auto cols = q.column_list();
    RationalCone eff{2, {}};
    for (const auto& c : cols) eff.generators.push_back(to_rational(c));
    bool proper = false;
    for (long x = -4; x <= 4; ++x)
      for (long y = -4; y <= 4; ++y) {
        RatVector p{x, y};
        bool in_all = true;
        for (std::size_t j = 0; j < cols.size(); ++j) {
          RationalCone c{2, {}};
          for (std::size_t i = 0; i < cols.size(); ++i)
            if (i != j) c.generators.push_back(to_rational(cols[i]));
          in_all = in_all && cone_membership(p, c, false);
        }
        CHECK(m.contains(p) == in_all);
        if (cone_membership(p, eff, false) && !in_all) proper = true;
      }
    CHECK(proper);
  }
}

TEST_CASE("ambient fan") {
  SUBCASE("P3 x P3 at L = (3, 3)") {
    auto q = p3p3_degrees();
    Fan f = ambient_fan(toric(q), IntVector{3, 3});
    CHECK(f.cones().size() == 16);
    std::set<IndexSet> expected;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = i + 1; j < 8; ++j)
        if (interior_of_pair(q, i, j, {3, 3})) {
          IndexSet c;
          for (std::size_t k = 0; k < 8; ++k)
            if (k != i && k != j) c.push_back(k);
          CHECK(oracle::abs_det(std::vector<IntVector>{q.column(i), q.column(j)}) == 1);
          expected.insert(c);
        }
    CHECK(std::set<IndexSet>(f.cones().begin(), f.cones().end()) == expected);
    auto pr = fan_checks(f);
    CHECK((pr.is_smooth && pr.is_complete));
  }
  SUBCASE("P^n") {
    Fan f = ambient_fan(toric(IntMatrix{{1, 1, 1, 1}}), IntVector{1});
    CHECK(f.cones().size() == 4);
    CHECK(f.dimension() == 3);
  }
  SUBCASE("no torus directions") {
    CHECK_THROWS_AS(ambient_fan(toric(IntMatrix{{1, 0}, {0, 1}}), IntVector{1, 1}), std::domain_error);
  }
  SUBCASE("outside the moving cone") {
    IntMatrix q{{1, 1, 0, 0}, {0, 0, 1, 1}};
    CHECK_THROWS_AS(ambient_fan(toric(q), IntVector{1, 0}), std::domain_error);
  }
  SUBCASE("chamber wall") {
    IntMatrix q{{1, 1, 1, 0, 0}, {0, 0, 1, 1, 1}};
    CHECK_NOTHROW(ambient_fan(toric(q), IntVector{2, 1}));
    try {
      ambient_fan(toric(q), IntVector{1, 1});
      FAIL("expected a wall");
    } catch (const std::domain_error& e) {
      CHECK(std::string(e.what()).find("non-generic polarization") != std::string::npos);
    }
  }
}

TEST_CASE("Sigma and Phi for the bilinear hypersurface") {
  auto p = p3p3_one();
  IntVector l{3, 3};
  auto sigma = sigma_bunch(p, l);
  auto phi = phi_bunch(p, l);
  std::set<IndexSet> s(sigma.index_sets.begin(), sigma.index_sets.end());
  for (const auto& j : phi.index_sets) CHECK(s.count(j) == 1);

  // Sigma: J carries both degrees. Phi: in addition the restriction of g to
  // the variables of J is not a single monomial (which never vanishes on
  // the torus).
  std::set<IndexSet> sigma_oracle, phi_oracle;
  for (unsigned mask = 1; mask < 256; ++mask) {
    IndexSet j;
    bool odd = false, even = false;
    for (std::size_t i = 0; i < 8; ++i)
      if (mask & (1u << i)) {
        j.push_back(i);
        (i % 2 == 0 ? odd : even) = true;
      }
    if (!(odd && even)) continue;
    sigma_oracle.insert(j);
    int terms = 0;
    for (unsigned k = 0; k < 4; ++k)
      if ((mask >> (2 * k) & 3u) == 3u) ++terms;
    if (terms != 1) phi_oracle.insert(j);
  }
  CHECK(s == sigma_oracle);
  CHECK(std::set<IndexSet>(phi.index_sets.begin(), phi.index_sets.end()) == phi_oracle);
  CHECK(phi.index_sets.size() == 117);
  CHECK(is_locally_factorial(phi));
  CHECK(picard_group(phi).same_lattice(LatticeBasis::full(2)));
}

TEST_CASE("Phi for monomial-free toric input is all of Sigma") {
  auto p = toric(IntMatrix{{1, 1, 1}});
  auto phi = phi_bunch(p, IntVector{3});
  CHECK(phi.index_sets.size() == 7);
  CHECK_FALSE(phi.phi_assumed_maximal);
}

TEST_CASE("Picard group and local factoriality") {
  Bunch artificial{2, {{0, 1}, {2, 3}}, {{{2, 0}, {0, 1}}, {{1, 0}, {0, 2}}}, false};
  auto pic = picard_group(artificial);
  CHECK(pic.same_lattice(LatticeBasis(2, {{2, 0}, {0, 2}})));
  CHECK(pic.same_lattice(lattice_intersection(LatticeBasis(2, {{2, 0}, {0, 1}}), LatticeBasis(2, {{1, 0}, {0, 2}}))));
  CHECK_FALSE(is_locally_factorial(artificial));
  Bunch single{2, {{0, 1}}, {{{1, 0}, {0, 1}}}, false};
  CHECK(picard_group(single).same_lattice(LatticeBasis::full(2)));
  CHECK(is_locally_factorial(single));
}

TEST_CASE("anticanonical class") {
  CHECK(anticanonical_class(p3p3_one()) == IntVector{3, 3});
  CHECK(anticanonical_class(toric(p3p3_degrees())) == IntVector{4, 4});
  GradedCoxPresentation two(p3p3_degrees(), {{1, 1}, {1, 1}});
  CHECK(anticanonical_class(two) == IntVector{2, 2});
}

TEST_CASE("units condition") {
  CHECK(units_condition_sufficient(toric(p3p3_degrees())));
  CHECK_FALSE(units_condition_sufficient(toric(IntMatrix{{1, 0, 0}, {0, 1, 0}})));
  CHECK_FALSE(units_condition_sufficient(toric(IntMatrix{{1, -1}})));
}
