#include <random>

#include "doctest.h"
#include "flagcoh/coinv.hpp"
#include "flagcoh/errors.hpp"
#include "flagcoh/linalg.hpp"
#include "flagcoh/verify.hpp"
#include "oracles.hpp"

using namespace flagcoh;

namespace {

struct Fixture {
  explicit Fixture(const char* name, int cap = -1)
      : group(RootSystem::build(CartanType::parse(name))), dd(group), coinv(group, dd, cap) {}
  WeylGroup group;
  DividedDifferences dd;
  CoinvariantAlgebra coinv;
};

std::vector<int> textbook_degrees(char family, int l) {
  std::vector<int> d;
  switch (family) {
    case 'A':
      for (int i = 2; i <= l + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= l; ++i) d.push_back(2 * i);
      break;
    case 'G':
      d = {2, 6};
      break;
  }
  return d;
}

}  // namespace

TEST_CASE("Poincare series: census, product formula and length census") {
  for (const auto& [family, rank] : std::vector<std::pair<char, int>>{
           {'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'G', 2}}) {
    const std::string name = std::string(1, family) + std::to_string(rank);
    CAPTURE(name);
    Fixture f(name.c_str());
    CHECK(f.group.roots().degrees() == textbook_degrees(family, rank));
    const Series census = f.coinv.poincare_series();
    CHECK(census == degree_product_series(textbook_degrees(family, rank)));
    if (family != 'G') CHECK(census == oracle::EpsilonModel::make(family, rank).length_census());
    CHECK(census == length_census(f.group));
    const GradedSlice& top = f.coinv.ideal_slice(f.coinv.top_degree() + 1);
    CHECK(top.dimension() == top.ambient_dimension());
  }
  Fixture b2("B2");
  CHECK(b2.coinv.poincare_series() == Series{1, 2, 2, 2, 1});
  Fixture g2("G2");
  CHECK(g2.coinv.poincare_series() == Series{1, 2, 2, 2, 2, 2, 1});
}

TEST_CASE("invariant dimensions follow the degrees") {
  for (const char* name : {"A3", "B3", "G2"}) {
    CAPTURE(name);
    Fixture f(name);
    const auto expected = oracle::invariant_series(f.group.roots().degrees(), f.coinv.degree_cap());
    for (int j = 0; j <= f.coinv.degree_cap(); ++j) {
      const GradedSlice& inv = f.coinv.invariants(j);
      CHECK(static_cast<std::int64_t>(inv.dimension()) == expected[j]);
      for (const auto& p : inv.basis)
        for (std::size_t w = 0; w < f.group.order(); ++w) CHECK(act(f.group, w, p) == p);
    }
  }
}

TEST_CASE("ideal slices agree with an independent rank computation") {
  Fixture f("A3");
  for (int k = 0; k <= 7; ++k) {
    const auto mons = monomials_of_degree(3, k);
    RationalMatrix rows;
    for (int j = 1; j <= k; ++j)
      for (const auto& e : monomials_of_degree(3, k - j))
        for (const auto& p : f.coinv.invariants(j).basis) rows.push_back((Polynomial::monomial(e) * p).coordinates(mons));
    CHECK(f.coinv.ideal_slice(k).dimension() == oracle::gauss_rank(rows));
  }
}

TEST_CASE("degree cap") {
  Fixture f("A2", 3);
  CHECK(f.coinv.degree_cap() == 3);
  CHECK_THROWS_AS(f.coinv.ideal_slice(4), LimitError);
  Fixture g("A2");
  CHECK(g.coinv.degree_cap() == 5);
}

TEST_CASE("harmonic basis complements the ideal") {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(name);
    Fixture f(name);
    for (int k = 0; k <= f.coinv.top_degree(); ++k) {
      const auto basis = f.coinv.harmonic_basis(k);
      const GradedSlice& ideal = f.coinv.ideal_slice(k);
      RationalMatrix rows;
      for (const auto& p : basis) rows.push_back(p.coordinates(ideal.monomials));
      CHECK(oracle::gauss_rank(rows) == basis.size());
      for (const auto& p : ideal.basis) rows.push_back(p.coordinates(ideal.monomials));
      CHECK(oracle::gauss_rank(rows) == ideal.ambient_dimension());
    }
  }
}

TEST_CASE("harmonic coordinates") {
  std::mt19937_64 rng(31);
  for (const char* name : {"A2", "B2", "G2"}) {
    CAPTURE(name);
    Fixture f(name);
    for (int k = 0; k <= f.coinv.top_degree(); ++k) {
      const auto basis = f.coinv.harmonic_basis(k);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        RationalVector unit(basis.size(), 0);
        unit[i] = 1;
        CHECK(f.coinv.harmonic_coordinates(basis[i]) == unit);
      }
      for (int t = 0; t < 5; ++t) {
        const Polynomial g = random_polynomial(rng, 2, k, 4).homogeneous_part(k);
        if (g.is_zero()) continue;
        const RationalVector c = f.coinv.harmonic_coordinates(g);
        Polynomial rest = g;
        for (std::size_t i = 0; i < basis.size(); ++i) rest -= basis[i] * c[i];
        CHECK(f.coinv.contains(rest));
      }
    }
  }
}

TEST_CASE("invariants of parabolic subgroups") {
  for (const char* name : {"A2", "B2", "A3"}) {
    CAPTURE(name);
    Fixture f(name);
    const int l = f.group.rank();
    for (int mask = 0; mask < (1 << l); ++mask) {
      std::vector<int> gens;
      RationalVector x0(l, 1);
      for (int i = 0; i < l; ++i)
        if ((mask >> i) & 1) {
          gens.push_back(i);
          x0[i] = 0;
        }
      const Subgroup h = f.group.generated_by(gens);
      CHECK(h.order() == oracle::brute_stabilizer_order(f.group, x0));
      const Series q = f.coinv.invariant_quotient_series(h);
      std::int64_t total = 0;
      for (auto c : q) total += c;
      CHECK(total == static_cast<std::int64_t>(f.group.order() / h.order()));
    }
    Subgroup all;
    for (std::size_t w = 0; w < f.group.order(); ++w) all.elements.push_back(w);
    Series only_constants(f.coinv.top_degree() + 1, 0);
    only_constants[0] = 1;
    CHECK(f.coinv.invariant_quotient_series(all) == only_constants);
  }
}

TEST_CASE("A3 with W_x generated by s1 and s3") {
  Fixture f("A3");
  CHECK(f.coinv.invariant_quotient_series(f.group.generated_by({0, 2})) == Series{1, 1, 2, 1, 1, 0, 0});
}

TEST_CASE("Hiller criterion") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    CAPTURE(name);
    Fixture f(name);
    CHECK_FALSE(f.coinv.contains(f.coinv.weyl_vector_product()));
    CHECK(f.coinv.hiller_criterion({}).equals_coinvariant_ideal());
    const Polynomial g1 = Polynomial::variable(f.group.rank(), 0);
    CHECK(f.coinv.hiller_criterion(std::span<const Polynomial>(&g1, 1)).d_in_ideal);
  }
  // adding an invariant changes nothing
  Fixture f("B2");
  const Polynomial q = f.coinv.invariants(2).basis.front();
  CHECK_FALSE(f.coinv.hiller_criterion(std::span<const Polynomial>(&q, 1)).d_in_ideal);
}

TEST_CASE("representations on degree-m classes and spheres") {
  const RootSystem a1 = RootSystem::build(CartanType::parse("A1"));
  CHECK(euler_rep(a1, 0) == IntMatrix{-1});
  CHECK(sphere_rep(a1, 0) == IntMatrix{-1});
  const RootSystem b2 = RootSystem::build(CartanType::parse("B2"));
  // s_1(tau_1) = -tau_1, s_1(tau_2) = tau_2 - a_12 tau_1 = tau_2 + tau_1
  CHECK(euler_rep(b2, 0) == IntMatrix{-1, 1, 0, 1});
  CHECK(pairing_matrix(b2) == IntMatrix{2, -2, -1, 2});
  for (const char* name : {"A2", "B2", "G2", "B3", "F4"}) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::build(CartanType::parse(name));
    CHECK(check_representations(rs).ok());
  }
}

TEST_CASE("degree product series") {
  CHECK(degree_product_series(std::vector<int>{2}) == Series{1, 1});
  CHECK(degree_product_series(std::vector<int>{2, 3}) == Series{1, 2, 2, 1});
  CHECK(degree_product_series(std::vector<int>{}) == Series{1});
}
