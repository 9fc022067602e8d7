#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxcheck/fans.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <map>

using namespace coxcheck;

namespace {

const Fan p1 = gen::projective_space(1);
const Fan p2 = gen::projective_space(2);
const Fan p1xp1 = gen::product(p1, p1);

RatVector ones(std::size_t m) { return RatVector(m, Rational(1)); }

// Exactness of Z^m -> (rays) and the Gale dual: every integer relation among
// the rays is a combination of the rows of q, found by solving over Z.
bool rows_are_relation_lattice(const IntMatrix& p, const IntMatrix& q) {
  if ((p * q.transpose()) != IntMatrix(p.rows(), q.rows())) return false;
  std::vector<IntVector> rows = q.row_list();
  const std::size_t m = p.cols();
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c)
        for (long d = -2; d <= 2; ++d) {
          if (m != 4) return false;
          IntVector lam{a, b, c, d};
          if (p * lam != IntVector(p.rows())) continue;
          if (!oracle::in_lattice(rows, lam)) return false;
        }
  return true;
}

}  // namespace

TEST_CASE("gale dual") {
  SUBCASE("P1") {
    auto q = gale_dual(p1.rays());
    REQUIRE(q.rows() == 1);
    CHECK(abs(q(0, 0)) == 1);
    CHECK(q(0, 0) == q(0, 1));
  }
  SUBCASE("P3 x P3 gives the bidegrees up to GL(2, Z)") {
    Fan p3p3 = gen::product(gen::projective_space(3), gen::projective_space(3));
    auto q = gale_dual(p3p3.rays());
    REQUIRE(q.rows() == 2);
    CHECK(is_gale_pair(p3p3.rays(), q));
    IntMatrix expected(2, 8);
    for (int i = 0; i < 4; ++i) expected(0, i) = 1;
    for (int i = 4; i < 8; ++i) expected(1, i) = 1;
    CHECK(LatticeBasis::from_generators(8, q.row_list()).same_lattice(LatticeBasis(8, expected.row_list())));
  }
  SUBCASE("blow-up of P2: exactness by enumeration") {
    IntMatrix p{{1, 0, -1, 1}, {0, 1, -1, 1}};
    auto q = gale_dual(p);
    CHECK(q.rows() == 2);
    CHECK(rows_are_relation_lattice(p, q));
    CHECK(LatticeBasis::from_generators(2, q.column_list()).same_lattice(LatticeBasis::full(2)));
  }
  SUBCASE("rank deficiency") { CHECK_THROWS_AS(gale_dual(IntMatrix{{1, 2}, {2, 4}}), std::domain_error); }
}

TEST_CASE("fan checks") {
  auto pr = fan_checks(p2);
  CHECK(pr.is_smooth);
  CHECK(pr.is_simplicial);
  CHECK(pr.is_complete);
  Fan quadric(IntMatrix{{1, 1}, {0, 2}}, {{0, 1}});
  auto q = fan_checks(quadric);
  CHECK(q.is_simplicial);
  CHECK_FALSE(q.is_smooth);
  CHECK_FALSE(q.is_complete);
  CHECK(oracle::abs_det({{1, 0}, {1, 2}}) == 2);
  auto pp = fan_checks(p1xp1);
  CHECK((pp.is_smooth && pp.is_simplicial && pp.is_complete));
  CHECK_THROWS_AS(Fan(IntMatrix{{2, 0}, {0, 1}}, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("moment polytopes and Cartier data") {
  auto seg = dual_description(moment_polytope(p1, ones(2)));
  CHECK(oracle::sorted(seg.polytope.vertices()) == std::vector<RatVector>{{-1}, {1}});
  auto tri = moment_polytope(p2, ones(3));
  CHECK(oracle::sorted(dual_description(tri).polytope.vertices()) == oracle::vertices_by_subsets(tri));
  auto sq = dual_description(moment_polytope(p1xp1, ones(4)));
  CHECK(sq.polytope.vertices().size() == 4);

  auto c = cartier_data(p2, ones(3));
  auto k = p2.find_cone({0, 1});
  REQUIRE(k);
  CHECK(c[*k] == RatVector{-1, -1});
  auto cs = cartier_data(p1xp1, ones(4));
  CHECK(oracle::sorted(cs) == std::vector<RatVector>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
}

TEST_CASE("ampleness") {
  CHECK(is_ample(p2, ones(3)));
  auto c = cartier_data(p2, ones(3));
  // off-cone value for sigma = {e1, e2}: <-e1-e2, (-1,-1)> + 1 = 3
  auto k = *p2.find_cone({0, 1});
  CHECK(-c[k][0] - c[k][1] + 1 == 3);
  CHECK(is_ample(p1xp1, ones(4)));
  Fan f2(IntMatrix{{1, 0, -1, 0}, {0, 1, 2, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_FALSE(is_ample(f2, ones(4)));
  auto cf = cartier_data(f2, ones(4));
  bool some_zero = false;
  for (std::size_t s = 0; s < f2.cones().size(); ++s)
    for (std::size_t v = 0; v < 4; ++v) {
      const auto& cone = f2.cones()[s];
      if (std::find(cone.begin(), cone.end(), v) != cone.end()) continue;
      Rational val = dot(to_rational(f2.ray(v)), cf[s]) + 1;
      if (val == 0) some_zero = true;
    }
  CHECK(some_zero);
}

TEST_CASE("normal fan") {
  VPolytope tri(2, {{-1, -1}, {2, -1}, {-1, 2}});
  CHECK(same_fan(normal_fan(tri), p2));
  VPolytope sq(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  CHECK(same_fan(normal_fan(sq), p1xp1));
  VPolytope flat(2, {{0, 0}, {1, 0}});
  CHECK_THROWS_AS(normal_fan(flat), std::domain_error);
}

TEST_CASE("facet neighbours") {
  auto k = *p2.find_cone({0, 1});
  auto nb = facet_neighbors(p2, k);
  REQUIRE(nb.size() == 2);
  // dropping e1 leaves {e2, -e1-e2}; dropping e2 leaves {e1, -e1-e2}
  CHECK(p2.cones()[nb[0]] == IndexSet{1, 2});
  CHECK(p2.cones()[nb[1]] == IndexSet{0, 2});
  for (std::size_t s = 0; s < p1xp1.cones().size(); ++s) CHECK(facet_neighbors(p1xp1, s).size() == 2);
  Fan half(IntMatrix{{1, 0}, {0, 1}}, {{0, 1}});
  CHECK_THROWS_AS(facet_neighbors(half, 0), std::domain_error);
}

TEST_CASE("random complete fans: every facet is shared by exactly two cones") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto pair = gen::random_smooth_complete(rng, gen::uniform(rng, 2, 3), 4);
    const Fan& f = pair.fan;
    std::map<IndexSet, int> count;
    for (const auto& c : f.cones())
      for (std::size_t i = 0; i < c.size(); ++i) {
        IndexSet face = c;
        face.erase(face.begin() + static_cast<long>(i));
        ++count[face];
      }
    for (const auto& [face, n] : count) CHECK(n == 2);
    for (std::size_t s = 0; s < f.cones().size(); ++s) {
      auto nb = facet_neighbors(f, s);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        IndexSet shared;
        std::set_intersection(f.cones()[s].begin(), f.cones()[s].end(), f.cones()[nb[i]].begin(),
                              f.cones()[nb[i]].end(), std::back_inserter(shared));
        CHECK(shared.size() == f.dimension() - 1);
      }
    }
  }
}

TEST_CASE("weighted homogenisation") {
  auto h = weighted_homogenisation(p1, ones(2));
  CHECK(h.lifted.vectors == RatMatrix{{1, -1, 0}, {1, 1, 1}});
  REQUIRE(h.gale.vectors.rows() == 1);
  RatVector g = h.gale.vectors.row(0);
  if (g[0] < 0)
    for (auto& x : g) x = -x;
  CHECK(g == RatVector{1, 1, -2});

  auto hp = weighted_homogenisation(p2, ones(3));
  RatVector sum(hp.gale.vectors.rows());
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] -= hp.gale.vectors(i, j);
  CHECK(hp.gale.vectors.column(3) == sum);
}
