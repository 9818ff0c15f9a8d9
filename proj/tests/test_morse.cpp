#include "doctest.h"
#include "flagcoh/errors.hpp"
#include "flagcoh/morse.hpp"
#include "oracles.hpp"

using namespace flagcoh;

namespace {

WeylGroup group_of(const std::string& name) { return WeylGroup(RootSystem::build(CartanType::parse(name))); }

std::vector<RationalVector> wall_patterns(int l) {
  std::vector<RationalVector> out;
  for (int mask = 0; mask < (1 << l); ++mask) {
    RationalVector x0(l);
    for (int i = 0; i < l; ++i) x0[i] = ((mask >> i) & 1) ? Rational(0) : Rational(Rational(i + 2) / 3);
    out.push_back(x0);
  }
  return out;
}

// Multiplicity by root length in the model: long roots get m_long.
auto by_length(Rational long_norm, int m_long, int m_short) {
  return [=](const RationalVector& a) { return oracle::EpsilonModel::norm2(a) == long_norm ? m_long : m_short; };
}

}  // namespace

TEST_CASE("rank one with m = 2 is a 2-sphere") {
  const WeylGroup g = group_of("A1");
  const auto p = betti_numbers(g, MultiplicityTable::uniform(g.roots(), 2), RationalVector{1});
  CHECK(p.betti == Series{1, 0, 1});
  CHECK(p.euler_characteristic() == 2);
  CHECK(p.orbit.size() == 2);
}

TEST_CASE("indices agree with the permutation model") {
  for (const auto& [family, rank] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}}) {
    const std::string name = std::string(1, family) + std::to_string(rank);
    CAPTURE(name);
    const WeylGroup g = group_of(name);
    const auto model = oracle::EpsilonModel::make(family, rank);
    const Rational long_norm = family == 'C' ? 4 : 2;
    for (const auto& [m_long, m_short] : std::vector<std::pair<int, int>>{{2, 2}, {1, 1}, {2, 3}, {4, 1}}) {
      if (family == 'A' && m_long != m_short) continue;
      std::vector<int> per_root;
      for (const auto& r : g.roots().positive_roots()) per_root.push_back(g.roots().inner(r, r) == 2 ? m_long : m_short);
      std::vector<std::pair<IntVector, int>> entries;
      for (std::size_t i = 0; i < per_root.size(); ++i) entries.emplace_back(g.roots().positive_roots()[i], per_root[i]);
      const auto mult = MultiplicityTable::from_orbits(g.roots(), entries);
      for (const auto& x0 : wall_patterns(rank)) {
        CAPTURE(x0.size());
        const auto expected = model.betti(x0, by_length(long_norm, m_long, m_short));
        CHECK(betti_numbers(g, mult, x0).betti == expected);
      }
    }
  }
}

TEST_CASE("regular orbits: d_w = m l(w), total |W|") {
  for (const char* name : {"A2", "A3", "B2", "B3", "G2"}) {
    CAPTURE(name);
    const WeylGroup g = group_of(name);
    for (int m : {2, 4, 8}) {
      const auto mult = MultiplicityTable::uniform(g.roots(), m);
      const auto p = betti_numbers(g, mult, RationalVector(g.rank(), 1));
      CHECK(p.total() == static_cast<std::int64_t>(g.order()));
      CHECK(p.euler_characteristic() == static_cast<std::int64_t>(g.order()));
      for (const auto& pt : p.orbit) {
        CHECK(pt.index == m * g[pt.representative].length());
        CHECK(pt.index == morse_index(g.roots(), mult, pt));
      }
    }
  }
}

TEST_CASE("orbit points") {
  const WeylGroup g = group_of("B2");
  const auto pts = orbit_points(g, RationalVector{0, 1});
  CHECK(pts.size() == 4);
  for (const auto& p : pts) {
    CHECK(g.apply_to_point(p.representative, RationalVector{0, 1}) == p.simple_values);
    CHECK(p.root_values.size() == g.roots().positive_roots().size());
  }
  CHECK_THROWS_AS(orbit_points(g, RationalVector{1, -1}), InputError);
  CHECK_THROWS_AS(orbit_points(g, RationalVector{1}), InputError);
  CHECK(orbit_points(g, RationalVector{0, 0}).size() == 1);
}

TEST_CASE("counting with repetition") {
  const WeylGroup g = group_of("A3");
  const auto mult = MultiplicityTable::uniform(g.roots(), 2);
  const RationalVector x0{0, 1, 0};
  const auto distinct = betti_numbers(g, mult, x0);
  const auto repeated = betti_numbers(g, mult, x0, OrbitCounting::WithRepetition);
  CHECK(distinct.stabilizer_order == 4);
  CHECK(distinct.total() == 6);
  CHECK(repeated.total() == 24);
  for (std::size_t k = 0; k < distinct.betti.size(); ++k) CHECK(repeated.betti[k] == 4 * distinct.betti[k]);
}

TEST_CASE("stretch") {
  CHECK(stretch(Series{1, 2, 1}, 2) == Series{1, 0, 2, 0, 1});
  CHECK(stretch(Series{1, 1}, 1) == Series{1, 1});
  CHECK(stretch(Series{1}, 8) == Series{1});
}

TEST_CASE("agreement with the coinvariant algebra") {
  for (const char* name : {"A2", "B2", "A3", "G2"}) {
    CAPTURE(name);
    const WeylGroup g = group_of(name);
    const DividedDifferences dd(g);
    const CoinvariantAlgebra coinv(g, dd);
    for (int m : {2, 4, 8}) {
      const auto mult = MultiplicityTable::uniform(g.roots(), m);
      for (const auto& x0 : wall_patterns(g.rank())) {
        const auto r = verify_coinvariant_agreement(coinv, mult, x0);
        CHECK(r.pass());
        CHECK(r.orbit_size == r.expected_total);
        CHECK(r.morse_series == stretch(r.quotient_series, m));
      }
    }
    CHECK_THROWS_AS(verify_coinvariant_agreement(coinv, MultiplicityTable::uniform(g.roots(), 3), RationalVector(g.rank(), 1)),
                    InputError);
  }
}

TEST_CASE("perfectness witness") {
  for (const char* name : {"A2", "B2", "B3", "G2"}) {
    CAPTURE(name);
    const WeylGroup g = group_of(name);
    for (const auto& x0 : wall_patterns(g.rank())) {
      const auto r = perfectness_witness(g, MultiplicityTable::uniform(g.roots(), 2), x0);
      CHECK(r.hypothesis_holds);
      CHECK(r.violations.empty());
      CHECK(r.pass());
    }
  }
  const WeylGroup b2 = group_of("B2");
  const std::vector<std::pair<IntVector, int>> mixed{{{1, 0}, 2}, {{0, 1}, 3}};
  CHECK(perfectness_witness(b2, MultiplicityTable::from_orbits(b2.roots(), mixed), RationalVector{1, 1}).violations.empty());
  const auto one = perfectness_witness(b2, MultiplicityTable::uniform(b2.roots(), 1), RationalVector{1, 1});
  CHECK_FALSE(one.hypothesis_holds);
  CHECK_FALSE(one.violations.empty());
  CHECK(one.pass());
}
