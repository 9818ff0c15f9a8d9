#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flagcoh/polyring.hpp"
#include "flagcoh/weyl.hpp"

namespace flagcoh {

// g / alpha for a linear form alpha that divides g. Works by the change of
// variables y_p = alpha (p the first coordinate with alpha_p != 0), dividing
// by y_p and changing back. Throws ConsistencyError if a remainder is left.
Polynomial divide_by_linear_form(const Polynomial& g, const IntVector& alpha);

struct OperatorCheck {
  bool ok = true;
  std::size_t cases = 0;  // (word or pair, monomial) combinations compared
  std::string detail;     // first mismatch, if any
};

// Divided differences Delta_alpha f = (f - s_alpha f)/alpha and their
// composites Delta_w along reduced words. Operators (Delta_i and Delta_w) on
// each graded piece S^k are cached as the images of the monomial basis; the
// cache is filled under a mutex and entries are never replaced.
class DividedDifferences {
 public:
  explicit DividedDifferences(const WeylGroup& group) : group_(group) {}

  const WeylGroup& group() const { return group_; }

  // alpha must be a positive root.
  Polynomial delta_root(const IntVector& alpha, const Polynomial& f) const;
  Polynomial delta_simple(int i, const Polynomial& f) const;

  // Delta_{i1} o ... o Delta_{ik} for the word (i1..ik), applied right to
  // left through the cached simple operators. The word need not be reduced.
  Polynomial along_word(std::span<const int> word, const Polynomial& f) const;

  // Delta_w along the stored reduced word, through the per-degree cache.
  Polynomial delta(std::size_t w, const Polynomial& f) const;

  // Compare Delta along every reduced word of w on all monomials of degree <= cap.
  OperatorCheck well_defined(std::size_t w, int cap) const;

  // Delta_w o Delta_w' against Delta_{ww'} (lengths add) or 0 (otherwise),
  // on all monomials of degree <= cap.
  OperatorCheck composition_check(std::size_t w, std::size_t w2, int cap) const;

 private:
  using Images = std::map<Exponents, Polynomial, GrlexGreater>;
  std::shared_ptr<const Images> operator_on(std::size_t w, int degree) const;
  std::shared_ptr<const Images> simple_on(int i, int degree) const;
  static Polynomial apply_images(const Images& images, const Polynomial& homogeneous, int nvars);

  const WeylGroup& group_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, int>, std::shared_ptr<const Images>> cache_;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const Images>> simple_cache_;
};

}  // namespace flagcoh
