#include <random>

#include "doctest.h"
#include "flagcoh/errors.hpp"
#include "flagcoh/polyring.hpp"
#include "flagcoh/verify.hpp"
#include "oracles.hpp"

using namespace flagcoh;

namespace {

WeylGroup group_of(const char* name) { return WeylGroup(RootSystem::build(CartanType::parse(name))); }

Polynomial P(const char* text, int n = 2) { return Polynomial::parse(text, n); }

}  // namespace

TEST_CASE("parse and print") {
  CHECK(P("g1 + g2").to_string() == "g1 + g2");
  CHECK(P("g2 + g1").to_string() == "g1 + g2");
  CHECK(P("2*g1^2 - g1*g2 + 1/2").to_string() == "2*g1^2 - g1*g2 + 1/2");
  CHECK(P("(g1 + g2)^2").to_string() == "g1^2 + 2*g1*g2 + g2^2");
  CHECK(P("g1 - g1").to_string() == "0");
  CHECK(P("-g2").to_string() == "-g2");
  CHECK(P("3/6*g1*g1").to_string() == "1/2*g1^2");
  CHECK(P("g1^3*g2^2 + g1*g2^4").to_string() == "g1^3*g2^2 + g1*g2^4");
  CHECK(P("g1*(g2 - 2)").to_string() == "g1*g2 - 2*g1");
  for (const char* bad : {"g3", "g0", "g1 +", "2**g1", "(g1", "g1^-1", "x", "g1^g2", "1/0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(P(bad), InputError);
  }
}

TEST_CASE("round trip through the text form") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Polynomial f = random_polynomial(rng, 3, 4, 5);
    CHECK(Polynomial::parse(f.to_string(), 3) == f);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Polynomial a = random_polynomial(rng, 3, 3, 4);
    const Polynomial b = random_polynomial(rng, 3, 3, 4);
    const Polynomial c = random_polynomial(rng, 3, 3, 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial(3));
    CHECK(a.pow(3) == a * a * a);
    const RationalVector x{Rational(1) / 3, -2, 5};
    CHECK((a * b + c).evaluate(x) == a.evaluate(x) * b.evaluate(x) + c.evaluate(x));
  }
}

TEST_CASE("grading") {
  const Polynomial f = P("g1^2 + g2 + 3");
  CHECK(f.degree() == 2);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(f.homogeneous_part(1) == P("g2"));
  CHECK(f.grade_decompose().size() == 3);
  CHECK(Polynomial(2).degree() == -1);
  const auto mons = monomials_of_degree(3, 2);
  CHECK(mons.size() == 6);
  const Polynomial h = P("g1^2 - 2*g2*g3 + 1/2*g3^2", 3);
  CHECK(Polynomial::from_coordinates(mons, h.coordinates(mons)) == h);
}

TEST_CASE("the action is a ring homomorphism and a group action") {
  std::mt19937_64 rng(5);
  for (const char* name : {"A2", "B2", "G2"}) {
    const WeylGroup g = group_of(name);
    for (int t = 0; t < 10; ++t) {
      const Polynomial f = random_polynomial(rng, 2, 3, 4);
      const Polynomial h = random_polynomial(rng, 2, 3, 4);
      for (std::size_t u = 0; u < g.order(); ++u) {
        CHECK(act(g, u, f * h) == act(g, u, f) * act(g, u, h));
        const std::size_t v = (u * 7 + t) % g.order();
        CHECK(act(g, g.multiply(u, v), f) == act(g, u, act(g, v, f)));
      }
    }
  }
}

TEST_CASE("reflections agree with the Gram-matrix formula") {
  std::mt19937_64 rng(9);
  for (const char* name : {"A2", "B2", "G2", "C3"}) {
    const WeylGroup g = group_of(name);
    const RootSystem& rs = g.roots();
    for (const auto& a : rs.positive_roots()) {
      const Polynomial f = random_polynomial(rng, rs.rank(), 3, 4);
      CHECK(act(g, g.reflection(a), f) == oracle::reflect_polynomial(rs, a, f));
    }
  }
}

TEST_CASE("Reynolds operator") {
  std::mt19937_64 rng(13);
  const WeylGroup g = group_of("B2");
  for (int t = 0; t < 10; ++t) {
    const Polynomial f = random_polynomial(rng, 2, 4, 4);
    const Polynomial r = reynolds(g, f);
    CHECK(reynolds(g, r) == r);
    for (std::size_t w = 0; w < g.order(); ++w) CHECK(act(g, w, r) == r);
  }
  CHECK(reynolds(g, P("g1")).is_zero());
  const Subgroup h = g.generated_by({0});
  const Polynomial a = average(g, h, P("g2"));
  CHECK(act(g, g.generator(0), a) == a);
}

TEST_CASE("the product of positive roots is skew-invariant") {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(name);
    const WeylGroup g = group_of(name);
    const Polynomial d = weyl_vector_product(g.roots());
    CHECK(d.degree() == static_cast<int>(g.roots().num_positive()));
    CHECK(d.is_homogeneous());
    for (std::size_t w = 0; w < g.order(); ++w) CHECK(act(g, w, d) == (g[w].length() % 2 ? -d : d));
  }
  const WeylGroup a2 = group_of("A2");
  CHECK(weyl_vector_product(a2.roots()) == P("g1*g2*(g1 + g2)"));
}
