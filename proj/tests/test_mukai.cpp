#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxcheck/certificate.hpp"
#include "coxcheck/mukai.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace coxcheck;

namespace {

IntMatrix p3p3_degrees() {
  IntMatrix q(2, 8);
  for (int i = 0; i < 8; ++i) q(i % 2 == 0 ? 1 : 0, i) = 1;
  return q;
}

ConstructionInput p3p3_one() {
  ConstructionInput c;
  c.presentation = GradedCoxPresentation(p3p3_degrees(), {{1, 1}}, {parse_polynomial("T1*T2+T3*T4+T5*T6+T7*T8", 8)});
  return c;
}

ConstructionInput p3p3_two() {
  ConstructionInput c;
  c.presentation = GradedCoxPresentation(
      p3p3_degrees(), {{1, 1}, {1, 1}},
      {parse_polynomial("T1*T2+T3*T4+T5*T6", 8), parse_polynomial("-T3*T4+T5*T6+T7*T8", 8)});
  return c;
}

ConstructionInput toric_input(const Fan& f) {
  ConstructionInput c;
  c.presentation = GradedCoxPresentation(gale_dual(f.rays()), {});
  c.ambient = f;
  c.delta_rays = IntVector(f.ray_count());
  return c;
}

RatVector ones(std::size_t m) { return RatVector(m, Rational(1)); }

const Fan p1 = gen::projective_space(1);
const Fan p2 = gen::projective_space(2);
const Fan p1xp1 = gen::product(p1, p1);

}  // namespace

TEST_CASE("degree_not_small") {
  GradedCoxPresentation p(p3p3_degrees(), {});
  CHECK(degree_not_small(IntVector{1, 1}, p));
  // a degree itself lies in conv(degrees)
  CHECK(degree_not_small(IntVector{1, 0}, p));
  // (1, 0) = (2, 0) / 2 is in conv(0, degrees) but not in conv(degrees); the
  // columns (3, 2), (2, 3) make the grading surjective without changing that
  GradedCoxPresentation r(IntMatrix{{2, 0, 3, 2}, {0, 2, 2, 3}}, {});
  CHECK_FALSE(degree_not_small(IntVector{1, 0}, r));
}

TEST_CASE("check_construction") {
  CHECK(check_construction(p3p3_one()).holds());
  CHECK(check_construction(p3p3_two()).holds());
  Fan f2(IntMatrix{{1, 0, -1, 0}, {0, 1, 2, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto checks = check_construction(toric_input(f2));
  CHECK_FALSE(checks.holds());
  REQUIRE(checks.find("anticanonical_ample_rays"));
  CHECK(checks.find("anticanonical_ample_rays")->verdict == Verdict::failed);
  ConstructionInput wrong = p3p3_one();
  wrong.delta_rays = IntVector{1, 2};
  CHECK_THROWS_AS(check_construction(wrong), std::invalid_argument);
}

TEST_CASE("fano index") {
  auto z2 = LatticeBasis::full(2);
  CHECK(fano_index(IntVector{3, 3}, z2) == 3);
  CHECK(fano_index(IntVector{2, 2}, z2) == 2);
  for (long n = 1; n <= 6; ++n) CHECK(fano_index(IntVector{n + 1}, LatticeBasis::full(1)) == n + 1);
  CHECK(oracle::largest_divisor_k(z2.vectors(), {3, 3}, 20) == 3);
}

TEST_CASE("low coefficient representative") {
  auto rep = low_coefficient_representative(p3p3_one());
  CHECK(rep.sum == 6);
  CHECK(rep.sum <= 7);
  CHECK(*oracle::fiber_minimum(p3p3_degrees(), {3, 3}, ones(8)) == 6);
  CHECK(to_rational(p3p3_degrees()) * rep.a.values() == RatVector{3, 3});
  for (std::size_t i = 0; i < rep.a.size(); ++i) CHECK(rep.a[i] > 0);
}

TEST_CASE("index bounds") {
  auto b = index_bounds(p2, ones(3));
  for (const auto& e : b.entries) CHECK(e.value == 3);
  CHECK(b.minimum == 3);
  auto s = index_bounds(p1xp1, ones(4));
  for (const auto& e : s.entries) CHECK(e.value == 2);
  Fan f2(IntMatrix{{1, 0, -1, 0}, {0, 1, 2, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_THROWS_AS(index_bounds(f2, ones(4)), std::domain_error);

  auto r = verify_mukai_inequality(p3p3_one());
  REQUIRE(r.computed);
  Fan z = *r.ambient;
  auto cartier = cartier_data(z, r.a);
  Rational lowest = -1;
  for (std::size_t s2 = 0; s2 < z.cones().size(); ++s2)
    for (std::size_t v = 0; v < z.ray_count(); ++v) {
      const auto& c = z.cones()[s2];
      if (std::find(c.begin(), c.end(), v) != c.end()) continue;
      Rational val = dot(to_rational(z.ray(v)), cartier[s2]) + r.a[v];
      if (lowest < 0 || val < lowest) lowest = val;
    }
  CHECK(lowest >= 3);
  CHECK(lowest == r.min_bound);
}

TEST_CASE("extraction forms") {
  auto k = *p2.find_cone({0, 1});
  auto e = extraction_form(p2, k, 2);
  // -e1 - e2 + e1 + e2 = 0, so lambda = (1, 1) and l(u^) = 1 on every ray
  CHECK(e.gale_values == RatVector{1, 1, 1});
  auto q = gale_dual(p2.rays());
  RatVector anti(q.rows());
  for (std::size_t j = 0; j < 3; ++j) anti[0] += q(0, j);
  CHECK(dot(e.form, anti) == 3);
  CHECK_THROWS_AS(extraction_form(p2, k, 0), std::domain_error);

  auto qq = gale_dual(p1xp1.rays());
  RatVector anti2(qq.rows());
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < qq.rows(); ++i) anti2[i] += qq(i, j);
  const auto& c0 = p1xp1.cones()[0];
  for (std::size_t v = 0; v < 4; ++v)
    if (std::find(c0.begin(), c0.end(), v) == c0.end()) CHECK(dot(extraction_form(p1xp1, 0, v).form, anti2) == 2);
}

TEST_CASE("barycentric certificate") {
  CHECK(barycentric_certificate(cartier_data(p2, ones(3))) == RatVector(3, Rational(1, 3)));
  CHECK(barycentric_certificate(cartier_data(p1xp1, ones(4))) == RatVector(4, Rational(1, 4)));
  CHECK(barycentric_certificate(cartier_data(p1, ones(2))) == RatVector(2, Rational(1, 2)));
  std::vector<RatVector> off{{1, 0}, {2, 1}};
  CHECK_THROWS_AS(barycentric_certificate(off), std::domain_error);
}

TEST_CASE("full pipeline") {
  SUBCASE("one relation") {
    auto r = verify_mukai_inequality(p3p3_one());
    REQUIRE(r.outcome() == Outcome::verified);
    CHECK(r.ambient_anticanonical == IntVector{4, 4});
    CHECK(r.anticanonical == IntVector{3, 3});
    CHECK(r.fano_index == 3);
    CHECK(r.rho == 2);
    CHECK(r.n == 5);
    CHECK(r.lhs == 4);
    CHECK(r.inequality_holds);
    CHECK_FALSE(r.equality);
    CHECK(r.gamma == 1);
    CHECK(check_certificate(r).ok());
  }
  SUBCASE("two relations") {
    auto r = verify_mukai_inequality(p3p3_two());
    REQUIRE(r.outcome() == Outcome::verified);
    CHECK(r.fano_index == 2);
    CHECK(r.n == 4);
    CHECK(r.lhs == 2);
    CHECK(r.gamma == 2);
    CHECK(check_certificate(r).ok());
  }
  SUBCASE("P2") {
    auto r = verify_mukai_inequality(toric_input(p2));
    REQUIRE(r.outcome() == Outcome::verified);
    CHECK(r.fano_index == 3);
    CHECK(r.lhs == 2);
    CHECK(r.equality);
    CHECK(r.gamma == 0);
    CHECK(r.factors == std::vector<std::size_t>{2});
  }
  SUBCASE("blow-up of P2: no equality, recognition never runs") {
    Fan bl(IntMatrix{{1, 0, -1, 1}, {0, 1, -1, 1}}, {{0, 3}, {1, 3}, {1, 2}, {0, 2}});
    auto r = verify_mukai_inequality(toric_input(bl));
    REQUIRE(r.outcome() == Outcome::verified);
    CHECK(r.fano_index == 1);
    CHECK_FALSE(r.equality);
    CHECK_FALSE(r.factors);
  }
  SUBCASE("F2 fails a hypothesis and asserts nothing") {
    Fan f2(IntMatrix{{1, 0, -1, 0}, {0, 1, 2, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto r = verify_mukai_inequality(toric_input(f2));
    CHECK(r.outcome() == Outcome::hypothesis_failed);
    CHECK_FALSE(r.computed);
    CHECK(check_certificate(r).ok());
  }
}

TEST_CASE("equality recognition") {
  GradedCoxPresentation pp(gale_dual(p1xp1.rays()), {});
  auto e = recognize_equality_case(p1xp1, ones(4), 2, pp);
  CHECK(e.factors == std::vector<std::size_t>{1, 1});
  CHECK(e.contradictions.empty());
  GradedCoxPresentation p(gale_dual(p2.rays()), {});
  CHECK(recognize_equality_case(p2, ones(3), 3, p).factors == std::vector<std::size_t>{2});
  Fan p2p2 = gen::product(p2, p2);
  GradedCoxPresentation q(gale_dual(p2p2.rays()), {});
  CHECK(recognize_equality_case(p2p2, ones(6), 3, q).factors == std::vector<std::size_t>{2, 2});
  auto wrong = recognize_equality_case(p2, ones(3), 2, p);
  CHECK_FALSE(wrong.contradictions.empty());
}

TEST_CASE("certificate checker rejects tampering") {
  auto r = verify_mukai_inequality(p3p3_one());
  auto t = r;
  t.a[0] += Rational(1, 7);
  CHECK_FALSE(check_certificate(t).ok());
  t = r;
  t.fano_index = 4;
  CHECK_FALSE(check_certificate(t).ok());
  t = r;
  t.weights[0] += 1;
  CHECK_FALSE(check_certificate(t).ok());
  t = r;
  t.forms[0].form[0] += 1;
  CHECK_FALSE(check_certificate(t).ok());
  t = r;
  t.gamma = 0;
  CHECK_FALSE(check_certificate(t).ok());
}
