#include "flagcoh/morse.hpp"

#include <algorithm>
#include <map>

#include "flagcoh/errors.hpp"

namespace flagcoh {

namespace {

void check_chamber(const WeylGroup& group, const RationalVector& x0) {
  if (static_cast<int>(x0.size()) != group.rank())
    throw InputError("x0 needs " + std::to_string(group.rank()) + " simple-root values");
  for (std::size_t i = 0; i < x0.size(); ++i)
    if (x0[i] < 0)
      throw InputError("x0 lies outside the closed positive chamber (gamma_" + std::to_string(i + 1) + "(x0) < 0)");
}

Rational value(const IntVector& alpha, const RationalVector& simple_values) {
  Rational s = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] != 0) s += alpha[i] * simple_values[i];
  return s;
}

}  // namespace

std::vector<OrbitPoint> orbit_points(const WeylGroup& group, const RationalVector& x0) {
  check_chamber(group, x0);
  const auto& roots = group.roots().positive_roots();
  std::map<RationalVector, std::size_t> seen;
  std::vector<OrbitPoint> out;
  for (std::size_t w = 0; w < group.order(); ++w) {
    RationalVector p = group.apply_to_point(w, x0);
    if (seen.count(p)) continue;
    seen.emplace(p, out.size());
    OrbitPoint pt;
    pt.representative = w;
    for (const auto& alpha : roots) pt.root_values.push_back(value(alpha, p));
    pt.simple_values = std::move(p);
    out.push_back(std::move(pt));
  }
  return out;
}

int morse_index(const RootSystem& rs, const MultiplicityTable& mult, const OrbitPoint& p) {
  int d = 0;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
    if (rs.is_indivisible(k) && p.root_values[k] < 0) d += mult.of_root(k);
  return d;
}

std::int64_t MorseProfile::total() const {
  std::int64_t s = 0;
  for (auto b : betti) s += b;
  return s;
}

std::int64_t MorseProfile::euler_characteristic() const {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < betti.size(); ++k) s += (k % 2 == 0 ? 1 : -1) * betti[k];
  return s;
}

MorseProfile betti_numbers(const WeylGroup& group, const MultiplicityTable& mult, const RationalVector& x0,
                           OrbitCounting counting) {
  MorseProfile prof;
  prof.x0 = x0;
  prof.orbit = orbit_points(group, x0);
  prof.stabilizer_order = group.order() / prof.orbit.size();
  const std::int64_t weight = counting == OrbitCounting::WithRepetition ? static_cast<std::int64_t>(prof.stabilizer_order) : 1;
  for (auto& p : prof.orbit) {
    p.index = morse_index(group.roots(), mult, p);
    if (static_cast<int>(prof.betti.size()) <= p.index) prof.betti.resize(p.index + 1, 0);
    prof.betti[p.index] += weight;
  }
  std::stable_sort(prof.orbit.begin(), prof.orbit.end(), [](const OrbitPoint& a, const OrbitPoint& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.simple_values < b.simple_values;
  });
  return prof;
}

Series stretch(const Series& q, int m) {
  if (q.empty()) return {};
  Series out((q.size() - 1) * m + 1, 0);
  for (std::size_t k = 0; k < q.size(); ++k) out[k * m] = q[k];
  return out;
}

namespace {

Series trimmed(Series s) {
  while (s.size() > 1 && s.back() == 0) s.pop_back();
  return s;
}

}  // namespace

AgreementReport verify_coinvariant_agreement(const CoinvariantAlgebra& coinv, const MultiplicityTable& mult,
                                             const RationalVector& x0) {
  if (!mult.coinvariant_regime())
    throw InputError(
        "the coinvariant presentation needs all multiplicities equal to one value m in {2, 4, 8}; "
        "the Betti census alone is still available");
  const WeylGroup& group = coinv.group();
  AgreementReport r;
  r.x0 = x0;
  r.m = *mult.uniform_value();
  const MorseProfile prof = betti_numbers(group, mult, x0);
  const Subgroup stab = group.stabilizer(x0);
  r.morse_series = trimmed(prof.betti);
  r.quotient_series = trimmed(coinv.invariant_quotient_series(stab));
  r.stretched_quotient = trimmed(stretch(r.quotient_series, r.m));
  r.orbit_size = prof.orbit.size();
  r.expected_total = group.order() / stab.order();
  r.euler_characteristic = prof.euler_characteristic();
  r.series_match = r.morse_series == r.stretched_quotient;
  r.euler_match = r.euler_characteristic == static_cast<std::int64_t>(r.expected_total) &&
                  r.orbit_size == r.expected_total;
  return r;
}

PerfectnessReport perfectness_witness(const WeylGroup& group, const MultiplicityTable& mult, const RationalVector& x0) {
  PerfectnessReport r;
  r.hypothesis_holds = mult.min_value() >= 2;
  const MorseProfile prof = betti_numbers(group, mult, x0);
  std::map<RationalVector, std::size_t> position;
  for (std::size_t i = 0; i < prof.orbit.size(); ++i) position.emplace(prof.orbit[i].simple_values, i);

  const auto& rs = group.roots();
  std::vector<std::size_t> reflections;
  for (const auto& alpha : rs.indivisible_roots()) reflections.push_back(group.reflection(alpha));

  for (std::size_t qi = 0; qi < prof.orbit.size(); ++qi) {
    const OrbitPoint& q = prof.orbit[qi];
    for (std::size_t a = 0; a < reflections.size(); ++a) {
      const RationalVector img = group.apply_to_point(reflections[a], q.simple_values);
      const std::size_t pi = position.at(img);
      if (pi <= qi) continue;  // each unordered pair once; fixed points skipped
      ++r.pairs_checked;
      const OrbitPoint& p = prof.orbit[pi];
      if (std::abs(p.index - q.index) == 1)
        r.violations.push_back({pi, qi, rs.indivisible_roots()[a], p.index, q.index});
    }
  }
  return r;
}

}  // namespace flagcoh
