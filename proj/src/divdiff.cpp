#include "flagcoh/divdiff.hpp"

#include "flagcoh/errors.hpp"

namespace flagcoh {

Polynomial divide_by_linear_form(const Polynomial& g, const IntVector& alpha) {
  const int n = static_cast<int>(alpha.size());
  int p = 0;
  while (p < n && alpha[p] == 0) ++p;
  if (p == n) throw ConsistencyError("division by the zero linear form");

  // gamma_p = (y_p - sum_{i != p} alpha_i y_i) / alpha_p, gamma_i = y_i otherwise.
  std::vector<Polynomial> to_y;
  for (int i = 0; i < n; ++i) {
    if (i != p) {
      to_y.push_back(Polynomial::variable(n, i));
      continue;
    }
    RationalVector c(n, 0);
    c[p] = Rational(1, alpha[p]);
    for (int j = 0; j < n; ++j)
      if (j != p) c[j] = Rational(-alpha[j], alpha[p]);
    to_y.push_back(Polynomial::linear_form(c));
  }
  const Polynomial in_y = g.substitute(to_y);

  Polynomial quotient_y(n);
  for (const auto& [e, c] : in_y.terms()) {
    if (e[p] == 0)
      throw ConsistencyError("nonzero remainder dividing " + g.to_string() + " by " +
                             Polynomial::linear_form(alpha).to_string());
    Exponents q = e;
    q[p] -= 1;
    quotient_y += Polynomial::monomial(q, c);
  }

  std::vector<Polynomial> back;
  for (int i = 0; i < n; ++i)
    back.push_back(i == p ? Polynomial::linear_form(alpha) : Polynomial::variable(n, i));
  return quotient_y.substitute(back);
}

Polynomial DividedDifferences::delta_root(const IntVector& alpha, const Polynomial& f) const {
  const auto& rs = group_.roots();
  if (!rs.find_positive(alpha)) throw InputError("delta: not a positive root");
  const Polynomial moved = act(group_, group_.reflection(alpha), f);
  return divide_by_linear_form(f - moved, alpha);
}

Polynomial DividedDifferences::delta_simple(int i, const Polynomial& f) const {
  if (i < 0 || i >= group_.rank()) throw InputError("simple root index out of range");
  IntVector alpha(group_.rank(), 0);
  alpha[i] = 1;
  const Polynomial moved = act(group_, group_.generator(i), f);
  return divide_by_linear_form(f - moved, alpha);
}

Polynomial DividedDifferences::apply_images(const Images& images, const Polynomial& homogeneous, int nvars) {
  Polynomial out(nvars);
  for (const auto& [e, c] : homogeneous.terms()) out += images.at(e) * c;
  return out;
}

std::shared_ptr<const DividedDifferences::Images> DividedDifferences::simple_on(int i, int degree) const {
  const auto key = std::make_pair(i, degree);
  {
    std::lock_guard lock(mutex_);
    if (auto it = simple_cache_.find(key); it != simple_cache_.end()) return it->second;
  }
  auto images = std::make_shared<Images>();
  for (const Exponents& e : monomials_of_degree(group_.rank(), degree))
    images->emplace(e, delta_simple(i, Polynomial::monomial(e)));
  std::lock_guard lock(mutex_);
  return simple_cache_.try_emplace(key, std::move(images)).first->second;
}

Polynomial DividedDifferences::along_word(std::span<const int> word, const Polynomial& f) const {
  for (int i : word)
    if (i < 0 || i >= group_.rank()) throw InputError("word letter " + std::to_string(i + 1) + " out of range");
  const int l = group_.rank();
  Polynomial out(l);
  for (const auto& [k, part] : f.grade_decompose()) {
    Polynomial g = part;
    int deg = k;
    for (auto it = word.rbegin(); it != word.rend() && !g.is_zero(); ++it, --deg) {
      if (deg == 0) {
        g = Polynomial(l);
        break;
      }
      g = apply_images(*simple_on(*it, deg), g, l);
    }
    out += g;
  }
  return out;
}

std::shared_ptr<const DividedDifferences::Images> DividedDifferences::operator_on(std::size_t w, int degree) const {
  const auto key = std::make_pair(w, degree);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  auto images = std::make_shared<Images>();
  for (const Exponents& e : monomials_of_degree(group_.rank(), degree))
    images->emplace(e, along_word(group_[w].word, Polynomial::monomial(e)));
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(key, std::move(images)).first->second;
}

Polynomial DividedDifferences::delta(std::size_t w, const Polynomial& f) const {
  if (w == WeylGroup::identity()) return f;
  Polynomial out(group_.rank());
  for (const auto& [k, part] : f.grade_decompose()) {
    if (k < group_[w].length()) continue;  // lowers degree by l(w); lower pieces vanish
    out += apply_images(*operator_on(w, k), part, group_.rank());
  }
  return out;
}

OperatorCheck DividedDifferences::well_defined(std::size_t w, int cap) const {
  OperatorCheck report;
  const auto words = group_.reduced_words(w);
  for (int k = 0; k <= cap; ++k)
    for (const Exponents& e : monomials_of_degree(group_.rank(), k)) {
      const Polynomial mono = Polynomial::monomial(e);
      const Polynomial reference = along_word(words.front(), mono);
      for (std::size_t i = 1; i < words.size(); ++i) {
        ++report.cases;
        if (along_word(words[i], mono) != reference && report.ok) {
          report.ok = false;
          report.detail = "reduced words disagree on " + mono.to_string();
        }
      }
    }
  return report;
}

OperatorCheck DividedDifferences::composition_check(std::size_t w, std::size_t w2, int cap) const {
  OperatorCheck report;
  const std::size_t prod = group_.multiply(w, w2);
  const bool additive = group_[prod].length() == group_[w].length() + group_[w2].length();
  for (int k = 0; k <= cap; ++k)
    for (const Exponents& e : monomials_of_degree(group_.rank(), k)) {
      ++report.cases;
      const Polynomial mono = Polynomial::monomial(e);
      const Polynomial lhs = delta(w, delta(w2, mono));
      const Polynomial rhs = additive ? delta(prod, mono) : Polynomial(group_.rank());
      if (lhs != rhs && report.ok) {
        report.ok = false;
        report.detail = "composition fails on " + mono.to_string();
      }
    }
  return report;
}

}  // namespace flagcoh
