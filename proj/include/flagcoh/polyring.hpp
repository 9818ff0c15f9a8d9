#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagcoh/rational.hpp"
#include "flagcoh/rootsys.hpp"
#include "flagcoh/weyl.hpp"

namespace flagcoh {

using Exponents = std::vector<int>;

// Graded lexicographic order, largest first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

int total_degree(const Exponents& e);

// All exponent vectors of total degree k in n variables, grlex-descending.
std::vector<Exponents> monomials_of_degree(int nvars, int k);

// Sparse polynomial over Q in the simple roots gamma_1..gamma_n (printed
// g1..gn). Zero coefficients are never stored; the zero polynomial has no
// terms.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(Exponents e, const Rational& c = 1);
  // sum_i coeffs[i] gamma_i
  static Polynomial linear_form(const IntVector& coeffs);
  static Polynomial linear_form(const RationalVector& coeffs);

  // Text form "c1*g1^a1*g2^a2 + ...". Parentheses and integer powers of
  // parenthesised groups are accepted too.
  static Polynomial parse(std::string_view text, int nvars);

  int num_vars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const Exponents& e) const;

  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(int k) const;
  std::map<int, Polynomial> grade_decompose() const;

  // Coordinates in the given monomial list (all of one degree).
  RationalVector coordinates(std::span<const Exponents> basis) const;
  static Polynomial from_coordinates(std::span<const Exponents> basis, const RationalVector& coords);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(int e) const;

  // Ring map gamma_j -> images[j].
  Polynomial substitute(std::span<const Polynomial> images) const;
  Rational evaluate(std::span<const Rational> values) const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  int nvars_ = 0;
  Terms terms_;
};

// (w.f)(x) = f(w^{-1} x), i.e. gamma_j -> w(gamma_j).
Polynomial act(const WeylGroup& group, std::size_t w, const Polynomial& f);

// Average over the whole group.
Polynomial reynolds(const WeylGroup& group, const Polynomial& f);
// Average over a subgroup.
Polynomial average(const WeylGroup& group, const Subgroup& h, const Polynomial& f);

// d = product of the indivisible positive roots, homogeneous of degree N.
Polynomial weyl_vector_product(const RootSystem& rs);

}  // namespace flagcoh
