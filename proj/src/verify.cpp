#include "flagcoh/verify.hpp"

#include <algorithm>
#include <numeric>

#include "flagcoh/errors.hpp"
#include "flagcoh/linalg.hpp"
#include "flagcoh/morse.hpp"

namespace flagcoh {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

bool VerificationReport::pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::string series_to_string(const Series& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

Polynomial random_polynomial(std::mt19937_64& rng, int nvars, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  Polynomial p(nvars);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exponents e(nvars, 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++e[var(rng)];
    const Rational c = Rational(num(rng)) / den(rng);
    p += Polynomial::monomial(e, c);
  }
  return p;
}

namespace {

CheckResult check(std::string name, std::string certifies) {
  CheckResult c;
  c.name = std::move(name);
  c.certifies = std::move(certifies);
  return c;
}

void fail(CheckResult& c, const std::string& why) {
  if (c.status != CheckStatus::Fail) c.note = why;
  c.status = CheckStatus::Fail;
}

CheckResult rootsys_check(const RootSystem& rs) {
  CheckResult c = check("rootsys.invariants",
                        "positive roots nonnegative; Cartan form; closure under reflections; Gram positive definite; "
                        "sum of degrees = N + l");
  const auto a = audit(rs);
  c.expected = "all invariants hold";
  c.computed = std::string("positive_coordinates=") + (a.positive_coordinates ? "1" : "0") +
               " cartan_shape=" + (a.cartan_shape ? "1" : "0") + " reflection_closed=" + (a.reflection_closed ? "1" : "0") +
               " gram_positive_definite=" + (a.gram_positive_definite ? "1" : "0") + " degree_sum=" + (a.degree_sum ? "1" : "0");
  if (!a.ok()) fail(c, "root system audit failed");
  if (rs.type().family != CartanFamily::Custom && rs.positive_roots().size() != expected_positive_count(rs.type()))
    fail(c, "positive root count differs from the classification");
  return c;
}

CheckResult weyl_enumeration_check(const WeylGroup& g) {
  CheckResult c = check("weyl.enumeration", "|W| = prod d_j; l(w) = inversion count; l(w0) = N and w0 negates positive roots");
  const auto& rs = g.roots();
  const std::int64_t expected = std::accumulate(rs.degrees().begin(), rs.degrees().end(), std::int64_t{1},
                                                [](std::int64_t a, int d) { return a * d; });
  c.expected = "|W|=" + std::to_string(expected) + " l(w0)=" + std::to_string(rs.num_positive());
  c.computed = "|W|=" + std::to_string(g.order()) + " l(w0)=" + std::to_string(g[g.longest()].length());
  if (static_cast<std::int64_t>(g.order()) != expected) fail(c, "group order differs from the degree product");
  for (std::size_t w = 0; w < g.order(); ++w)
    if (g.inversion_count(w) != g[w].length()) {
      fail(c, "length differs from inversion count");
      break;
    }
  if (g[g.longest()].length() != static_cast<int>(rs.num_positive())) fail(c, "longest element has wrong length");
  for (const auto& r : rs.indivisible_roots()) {
    const IntVector img = g.apply(g.longest(), r);
    if (!std::all_of(img.begin(), img.end(), [](int x) { return x <= 0; })) fail(c, "w0 keeps a positive root positive");
  }
  return c;
}

CheckResult weyl_relations_check(const WeylGroup& g) {
  CheckResult c = check("weyl.relations", "s_i^2 = e; braid relations of order m_ij; stored words multiply to elements");
  const int l = g.rank();
  std::size_t relations = 0;
  for (int i = 0; i < l; ++i) {
    ++relations;
    if (g.multiply(g.generator(i), g.generator(i)) != WeylGroup::identity()) fail(c, "s_i^2 != e");
    for (int j = i + 1; j < l; ++j) {
      ++relations;
      const int m = coxeter_order(g.roots().cartan()[i][j], g.roots().cartan()[j][i]);
      Word x, y;
      for (int k = 0; k < m; ++k) {
        x.push_back(k % 2 == 0 ? i : j);
        y.push_back(k % 2 == 0 ? j : i);
      }
      if (g.from_word(x) != g.from_word(y)) fail(c, "braid relation fails");
      Word shorter(x.begin(), x.end() - 1), other(y.begin(), y.end() - 1);
      if (g.from_word(shorter) == g.from_word(other)) fail(c, "braid order is not minimal");
    }
  }
  for (std::size_t w = 0; w < g.order(); ++w)
    if (g.from_word(g[w].word) != w) fail(c, "stored word does not multiply to its element");
  c.expected = "all relations hold";
  c.computed = std::to_string(relations) + " relations, " + std::to_string(g.order()) + " words";
  return c;
}

CheckResult leibniz_check(const WeylGroup& g, const DividedDifferences& dd, const VerifyOptions& opt) {
  CheckResult c = check("divdiff.leibniz", "Delta_a(fg) = Delta_a(f) g + s_a(f) Delta_a(g) for positive roots a");
  std::mt19937_64 rng(opt.seed);
  std::size_t cases = 0;
  for (std::size_t n = 0; n < opt.leibniz_pairs; ++n) {
    const Polynomial f = random_polynomial(rng, g.rank(), 3, 4);
    const Polynomial h = random_polynomial(rng, g.rank(), 3, 4);
    for (const auto& alpha : g.roots().indivisible_roots()) {
      ++cases;
      const Polynomial lhs = dd.delta_root(alpha, f * h);
      const Polynomial rhs = dd.delta_root(alpha, f) * h + act(g, g.reflection(alpha), f) * dd.delta_root(alpha, h);
      if (lhs != rhs) fail(c, "Leibniz fails for f=" + f.to_string() + ", g=" + h.to_string());
    }
  }
  c.expected = "identity on every case";
  c.computed = std::to_string(opt.leibniz_pairs) + " random pairs, " + std::to_string(cases) + " cases, seed " +
               std::to_string(opt.seed);
  return c;
}

CheckResult well_defined_check(const WeylGroup& g, const DividedDifferences& dd) {
  CheckResult c = check("divdiff.well_defined", "Delta_w is independent of the reduced word");
  const int cap = static_cast<int>(g.roots().num_positive());
  std::size_t cases = 0;
  for (std::size_t w = 0; w < g.order(); ++w) {
    const auto r = dd.well_defined(w, cap);
    cases += r.cases;
    if (!r.ok) fail(c, r.detail);
  }
  c.expected = "all reduced words agree up to degree " + std::to_string(cap);
  c.computed = std::to_string(g.order()) + " elements, " + std::to_string(cases) + " comparisons";
  return c;
}

CheckResult composition_check(const WeylGroup& g, const DividedDifferences& dd, const VerifyOptions& opt) {
  CheckResult c = check("divdiff.composition", "Delta_w Delta_w' = Delta_ww' if l(ww') = l(w) + l(w'), else 0");
  const int cap = static_cast<int>(g.roots().num_positive());
  const std::size_t n = g.order();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (n * n <= opt.composition_pair_budget) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) pairs.emplace_back(a, b);
  } else {
    std::mt19937_64 rng(opt.seed ^ 0x5bd1e995u);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < opt.composition_pair_budget; ++k) pairs.emplace_back(pick(rng), pick(rng));
    c.note = "sampled " + std::to_string(pairs.size()) + " of " + std::to_string(n * n) + " pairs";
  }
  std::size_t cases = 0;
  for (const auto& [a, b] : pairs) {
    const auto r = dd.composition_check(a, b, cap);
    cases += r.cases;
    if (!r.ok) fail(c, r.detail);
  }
  c.expected = "rule holds up to degree " + std::to_string(cap);
  c.computed = std::to_string(pairs.size()) + " pairs, " + std::to_string(cases) + " comparisons";
  return c;
}

CheckResult poincare_check(const WeylGroup& g, const CoinvariantAlgebra& coinv) {
  CheckResult c = check("coinv.poincare_three_way",
                        "dim S^k - dim I_W^k = coeff of prod (1+...+t^{d_j-1}) = #{w : l(w) = k}; I_W^{N+1} = S^{N+1}");
  const Series census = coinv.poincare_series();
  const Series product = degree_product_series(g.roots().degrees());
  const Series lengths = length_census(g);
  c.expected = series_to_string(lengths);
  c.computed = series_to_string(census) + " | " + series_to_string(product);
  if (census != lengths || product != lengths) fail(c, "series disagree");
  const int top = coinv.top_degree() + 1;
  if (top > coinv.degree_cap()) {
    fail(c, "degree cap below N+1");
  } else {
    const GradedSlice& s = coinv.ideal_slice(top);
    if (s.dimension() != s.ambient_dimension()) fail(c, "I_W^{N+1} is not all of S^{N+1}");
  }
  return c;
}

CheckResult harmonic_check(const CoinvariantAlgebra& coinv) {
  CheckResult c = check("coinv.harmonic_complement",
                        "{Delta_w(d) : l(w) = N-k} is independent and spans a complement of I_W^k");
  std::string ranks;
  for (int k = 0; k <= coinv.top_degree(); ++k) {
    try {
      const auto basis = coinv.harmonic_basis(k);
      const GradedSlice& ideal = coinv.ideal_slice(k);
      RationalMatrix rows;
      for (const auto& p : basis) rows.push_back(p.coordinates(ideal.monomials));
      for (const auto& p : ideal.basis) rows.push_back(p.coordinates(ideal.monomials));
      const std::size_t r = rank(rows);
      ranks += (k ? "," : "") + std::to_string(r) + "/" + std::to_string(ideal.ambient_dimension());
      if (r != ideal.ambient_dimension()) fail(c, "complement does not fill S^" + std::to_string(k));
    } catch (const ConsistencyError& e) {
      fail(c, e.what());
    }
  }
  c.expected = "rank = dim S^k for every k";
  c.computed = ranks;
  return c;
}

CheckResult hiller_check(const WeylGroup& g, const CoinvariantAlgebra& coinv) {
  CheckResult c = check("coinv.hiller_criterion", "I = I_W iff d not in I; d not in I_W; d in I_W + <gamma_1>");
  const bool d_in_iw = coinv.contains(coinv.weyl_vector_product());
  const Polynomial g1 = Polynomial::variable(g.rank(), 0);
  const auto with_g1 = coinv.hiller_criterion(std::span<const Polynomial>(&g1, 1));
  c.expected = "d in I_W: no; d in I_W+<g1>: yes";
  c.computed = std::string("d in I_W: ") + (d_in_iw ? "yes" : "no") + "; d in I_W+<g1>: " + (with_g1.d_in_ideal ? "yes" : "no");
  if (d_in_iw) fail(c, "d lies in I_W");
  if (!with_g1.d_in_ideal) fail(c, "enlarged ideal not detected");
  return c;
}

CheckResult agreement_check(const WeylGroup& g, const CoinvariantAlgebra& coinv, const VerifyOptions& opt) {
  CheckResult c = check("morse.coinvariant_agreement",
                        "sum_p t^{d(p)} = Q(t^m), Q = stabilizer invariants of S/I_W; chi = |W|/|W_x0|; "
                        "d_w = m l(w) for regular x0; (S/I_W)^W = degree 0");
  if (!opt.multiplicities || !opt.multiplicities->coinvariant_regime()) {
    c.status = CheckStatus::Skip;
    c.note = "needs a uniform multiplicity m in {2,4,8} (pass --m)";
    return c;
  }
  const MultiplicityTable& mult = *opt.multiplicities;
  const int m = *mult.uniform_value();
  const int l = g.rank();
  std::size_t patterns = 0;
  for (int mask = 0; mask < (1 << l); ++mask) {
    RationalVector x0(l);
    for (int i = 0; i < l; ++i) x0[i] = (mask >> i) & 1;
    const auto r = verify_coinvariant_agreement(coinv, mult, x0);
    ++patterns;
    if (!r.pass())
      fail(c, "x0 mask " + std::to_string(mask) + ": " + series_to_string(r.morse_series) + " vs " +
                  series_to_string(r.stretched_quotient));
  }
  const RationalVector regular(l, 1);
  const MorseProfile prof = betti_numbers(g, mult, regular);
  for (const auto& p : prof.orbit)
    if (p.index != m * g[p.representative].length()) fail(c, "d_w != m l(w)");
  if (prof.total() != static_cast<std::int64_t>(g.order())) fail(c, "regular orbit total differs from |W|");

  Subgroup all;
  for (std::size_t w = 0; w < g.order(); ++w) all.elements.push_back(w);
  const Series inv = coinv.invariant_quotient_series(all);
  Series expected_inv(inv.size(), 0);
  expected_inv[0] = 1;
  if (inv != expected_inv) fail(c, "W-invariants of S/I_W are not just the constants");

  c.expected = "agreement for all " + std::to_string(1 << l) + " wall patterns";
  c.computed = std::to_string(patterns) + " patterns; regular census " + series_to_string(prof.betti);
  return c;
}

CheckResult perfectness_check(const WeylGroup& g, const VerifyOptions& opt) {
  CheckResult c = check("morse.perfectness", "no reflection-related critical points have indices differing by 1");
  if (!opt.multiplicities) {
    c.status = CheckStatus::Skip;
    c.note = "needs multiplicities (pass --m or --mult-table)";
    return c;
  }
  const RationalVector x0 = opt.x0 ? *opt.x0 : RationalVector(g.rank(), 1);
  const auto r = perfectness_witness(g, *opt.multiplicities, x0);
  c.expected = "0 adjacent pairs";
  c.computed = std::to_string(r.violations.size()) + " adjacent of " + std::to_string(r.pairs_checked) + " pairs";
  if (!r.hypothesis_holds) {
    c.status = CheckStatus::Skip;
    c.note = "some multiplicity is 1, outside the gap hypothesis; " + std::to_string(r.violations.size()) +
             " adjacent pairs found";
  } else if (!r.pass()) {
    fail(c, "adjacent indices among reflection-related points");
  }
  return c;
}

CheckResult representation_check(const RootSystem& rs) {
  CheckResult c = check("representation.pairing",
                        "Euler-class and sphere-class reflections satisfy s^2 = 1, braid relations, and preserve "
                        "P_ij = a_ji");
  const auto r = check_representations(rs);
  c.expected = "involutions=1 braid=1 pairing=1";
  c.computed = std::string("involutions=") + (r.involutions ? "1" : "0") + " braid=" + (r.braid ? "1" : "0") +
               " pairing=" + (r.pairing ? "1" : "0");
  if (!r.ok()) fail(c, "representation relations fail");
  return c;
}

}  // namespace

VerificationReport verify_all(const WeylGroup& group, const VerifyOptions& options) {
  VerificationReport report;
  const DividedDifferences dd(group);
  const CoinvariantAlgebra coinv(group, dd);
  report.checks.push_back(rootsys_check(group.roots()));
  report.checks.push_back(weyl_enumeration_check(group));
  report.checks.push_back(weyl_relations_check(group));
  report.checks.push_back(leibniz_check(group, dd, options));
  report.checks.push_back(well_defined_check(group, dd));
  report.checks.push_back(composition_check(group, dd, options));
  report.checks.push_back(poincare_check(group, coinv));
  report.checks.push_back(harmonic_check(coinv));
  report.checks.push_back(hiller_check(group, coinv));
  report.checks.push_back(agreement_check(group, coinv, options));
  report.checks.push_back(perfectness_check(group, options));
  report.checks.push_back(representation_check(group.roots()));
  return report;
}

}  // namespace flagcoh
