#include <numeric>

#include "doctest.h"
#include "flagcoh/errors.hpp"
#include "flagcoh/rootsys.hpp"
#include "oracles.hpp"

using namespace flagcoh;

namespace {

const char* const kTypes[] = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3",
                              "C4", "D3", "D4", "D5", "G2", "F4", "E6", "E7", "E8"};

char family_letter(const RootSystem& rs) { return rs.type().name()[0]; }

}  // namespace

TEST_CASE("positive roots match reflection closure of the simple roots") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::build(CartanType::parse(name));
    CHECK(rs.cartan() == standard_cartan_matrix(rs.type()));
    const auto closure = oracle::closure_positive_roots(rs.cartan());
    const std::set<IntVector> built(rs.positive_roots().begin(), rs.positive_roots().end());
    CHECK(built == closure);
    CHECK(rs.positive_roots().size() == expected_positive_count(rs.type()));
    CHECK(rs.is_reduced());
    CHECK(audit(rs).ok());
  }
}

TEST_CASE("degrees: sum is N + l and product is the group order") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::build(CartanType::parse(name));
    const auto& d = rs.degrees();
    CHECK(std::accumulate(d.begin(), d.end(), 0) == static_cast<int>(rs.num_positive()) + rs.rank());
    const std::int64_t prod = std::accumulate(d.begin(), d.end(), std::int64_t{1}, std::multiplies<>());
    CHECK(prod == oracle::weyl_order(family_letter(rs), rs.rank()));
  }
}

TEST_CASE("long roots have squared length 2 and Cartan entries follow the Gram matrix") {
  for (const char* name : {"A2", "B3", "C3", "G2", "F4"}) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::build(CartanType::parse(name));
    Rational longest = 0;
    for (const auto& r : rs.positive_roots()) longest = std::max(longest, rs.inner(r, r));
    CHECK(longest == 2);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j)
        CHECK(Rational(rs.cartan()[i][j]) == 2 * rs.gram()[j][i] / rs.gram()[i][i]);
  }
}

TEST_CASE("B2 and G2 root lists") {
  const RootSystem b2 = RootSystem::build(CartanType::parse("B2"));
  CHECK(b2.positive_roots() == std::vector<IntVector>{{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  CHECK(b2.cartan() == std::vector<IntVector>{{2, -1}, {-2, 2}});
  const RootSystem g2 = RootSystem::build(CartanType::parse("G2"));
  CHECK(g2.positive_roots().back() == IntVector{3, 2});
  CHECK(g2.degrees() == std::vector<int>{2, 6});
  CHECK(g2.num_orbits() == 2);
}

TEST_CASE("invalid types are rejected") {
  for (const char* bad : {"A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "Z2", "", "A", "2A"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(RootSystem::build(CartanType::parse(bad)), InputError);
  }
  CHECK(CartanType::parse("B", 3) == CartanType::parse("B3"));
}

TEST_CASE("reflections permute the roots and fix lengths") {
  const RootSystem rs = RootSystem::build(CartanType::parse("B3"));
  for (const auto& a : rs.positive_roots())
    for (const auto& b : rs.positive_roots()) {
      const IntVector r = rs.reflect(a, b);
      CHECK(rs.is_root(r));
      CHECK(rs.inner(r, r) == rs.inner(b, b));
    }
  IntVector minus{-1, 0, 0};
  CHECK(rs.reflect(IntVector{1, 0, 0}, IntVector{1, 0, 0}) == minus);
  CHECK(rs.is_root(minus));
  CHECK_FALSE(rs.is_root(IntVector{2, 0, 0}));
}

TEST_CASE("custom data reproduces the built-in system") {
  const RootSystem a2 = RootSystem::build(CartanType::parse("A2"));
  const RootSystem c = RootSystem::from_data({{2, -1}, {-1, 2}}, {{1, 1}, {0, 1}, {1, 0}});
  CHECK(c.cartan() == a2.cartan());
  CHECK(c.positive_roots() == a2.positive_roots());
  CHECK(c.degrees() == a2.degrees());
  CHECK(c.type().family == CartanFamily::Custom);
}

TEST_CASE("custom Gram matrices are rescaled so long roots have length 2") {
  const RootSystem c = RootSystem::from_data({{4, -2}, {-2, 2}}, {{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  CHECK(c.gram() == RationalMatrix{{2, -1}, {-1, 1}});
  CHECK(c.cartan() == RootSystem::build(CartanType::parse("B2")).cartan());
  CHECK(c.degrees() == std::vector<int>{2, 4});
}

TEST_CASE("custom data validation") {
  // not positive definite
  CHECK_THROWS_AS(RootSystem::from_data({{2, -2}, {-2, 2}}, {{1, 0}, {0, 1}, {1, 1}}), InputError);
  // not closed under reflections
  CHECK_THROWS_AS(RootSystem::from_data({{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}}), InputError);
  // negative coordinate
  CHECK_THROWS_AS(RootSystem::from_data({{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}, {1, -1}}), InputError);
  // not symmetric
  CHECK_THROWS_AS(RootSystem::from_data({{2, -1}, {0, 2}}, {{1, 0}, {0, 1}}), InputError);
  // non-integral Cartan entry
  CHECK_THROWS_AS(RootSystem::from_data({{2, -1}, {-1, 3}}, {{1, 0}, {0, 1}}), InputError);
  // duplicate root
  CHECK_THROWS_AS(RootSystem::from_data({{2, 0}, {0, 2}}, {{1, 0}, {0, 1}, {1, 0}}), InputError);
  // wrong degrees
  CHECK_THROWS_AS(RootSystem::from_data({{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}, {1, 1}}, std::vector<int>{2, 2}), InputError);
}

TEST_CASE("non-reduced BC2 counts indivisible roots only") {
  const RootSystem bc = RootSystem::from_data({{2, -1}, {-1, 1}},
                                              {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {0, 2}, {2, 2}});
  CHECK_FALSE(bc.is_reduced());
  CHECK(bc.positive_roots().size() == 6);
  CHECK(bc.num_positive() == 4);
  CHECK(bc.degrees() == std::vector<int>{2, 4});
  CHECK(bc.is_root(IntVector{0, -2}));
  CHECK(audit(bc).ok());
}

TEST_CASE("multiplicity tables") {
  const RootSystem b2 = RootSystem::build(CartanType::parse("B2"));
  CHECK_THROWS_AS(MultiplicityTable::uniform(b2, 0), InputError);
  CHECK(MultiplicityTable::uniform(b2, 2).coinvariant_regime());
  CHECK(MultiplicityTable::uniform(RootSystem::build(CartanType::parse("A2")), 8).coinvariant_regime());
  CHECK(MultiplicityTable::uniform(RootSystem::build(CartanType::parse("A2")), 4).coinvariant_regime());
  CHECK_FALSE(MultiplicityTable::uniform(b2, 3).coinvariant_regime());
  CHECK_FALSE(MultiplicityTable::uniform(b2, 1).coinvariant_regime());

  const std::vector<std::pair<IntVector, int>> entries{{{1, 0}, 2}, {{0, 1}, 5}};
  const auto t = MultiplicityTable::from_orbits(b2, entries);
  CHECK(t.per_root() == std::vector<int>{2, 5, 5, 2});
  CHECK_FALSE(t.uniform_value().has_value());
  CHECK(t.min_value() == 2);
  CHECK_FALSE(t.coinvariant_regime());

  const std::vector<std::pair<IntVector, int>> missing{{{1, 0}, 2}};
  CHECK_THROWS_AS(MultiplicityTable::from_orbits(b2, missing), InputError);
  const std::vector<std::pair<IntVector, int>> clash{{{1, 0}, 2}, {{1, 2}, 3}, {{0, 1}, 2}};
  CHECK_THROWS_AS(MultiplicityTable::from_orbits(b2, clash), InputError);
  const std::vector<std::pair<IntVector, int>> nonroot{{{1, 0}, 2}, {{0, 1}, 2}, {{2, 1}, 2}};
  CHECK_THROWS_AS(MultiplicityTable::from_orbits(b2, nonroot), InputError);
  const std::vector<std::pair<IntVector, int>> zero{{{1, 0}, 0}, {{0, 1}, 2}};
  CHECK_THROWS_AS(MultiplicityTable::from_orbits(b2, zero), InputError);
}

TEST_CASE("orbit partition: one orbit per root length in irreducible systems") {
  CHECK(RootSystem::build(CartanType::parse("A3")).num_orbits() == 1);
  CHECK(RootSystem::build(CartanType::parse("E6")).num_orbits() == 1);
  CHECK(RootSystem::build(CartanType::parse("B3")).num_orbits() == 2);
  CHECK(RootSystem::build(CartanType::parse("F4")).num_orbits() == 2);
}

TEST_CASE("degrees derived from root heights match the classification") {
  for (const char* name : kTypes) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::build(CartanType::parse(name));
    const RootSystem c = RootSystem::from_data(rs.gram(), rs.positive_roots());
    CHECK(c.degrees() == rs.degrees());
    CHECK(c.cartan() == rs.cartan());
  }
}
