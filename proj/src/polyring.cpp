#include "flagcoh/polyring.hpp"

#include <cctype>
#include <numeric>
#include <optional>

#include "flagcoh/errors.hpp"

namespace flagcoh {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::vector<Exponents> monomials_of_degree(int nvars, int k) {
  std::vector<Exponents> out;
  if (k < 0) return out;
  if (nvars == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  Exponents e(nvars, 0);
  // Lexicographically descending enumeration of compositions of k.
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[var] = a;
      rec(var + 1, left - a);
    }
  };
  rec(0, k);
  return out;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return monomial(std::move(e));
}

Polynomial Polynomial::monomial(Exponents e, const Rational& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear_form(const IntVector& coeffs) { return linear_form(to_rational(coeffs)); }

Polynomial Polynomial::linear_form(const RationalVector& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational Polynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);  // grlex puts the top degree first
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Polynomial Polynomial::homogeneous_part(int k) const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == k) p.terms_.emplace_hint(p.terms_.end(), e, c);
  return p;
}

std::map<int, Polynomial> Polynomial::grade_decompose() const {
  std::map<int, Polynomial> out;
  for (const auto& [e, c] : terms_) {
    auto [it, fresh] = out.try_emplace(total_degree(e), nvars_);
    it->second.terms_.emplace_hint(it->second.terms_.end(), e, c);
  }
  return out;
}

RationalVector Polynomial::coordinates(std::span<const Exponents> basis) const {
  RationalVector v(basis.size(), 0);
  std::size_t found = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto it = terms_.find(basis[i]);
    if (it != terms_.end()) {
      v[i] = it->second;
      ++found;
    }
  }
  if (found != terms_.size()) throw ConsistencyError("polynomial has terms outside the monomial basis");
  return v;
}

Polynomial Polynomial::from_coordinates(std::span<const Exponents> basis, const RationalVector& coords) {
  Polynomial p(basis.empty() ? 0 : static_cast<int>(basis[0].size()));
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coords[i]);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (nvars_ == 0) nvars_ = other.nvars_;
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, x] : p.terms_) x = -x;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p(std::max(a.nvars_, b.nvars_));
  Exponents e(p.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < p.nvars_; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw InputError("negative exponent");
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (static_cast<int>(images.size()) != nvars_) throw InputError("substitute: need one image per variable");
  const int target_vars = images.empty() ? 0 : images[0].num_vars();
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (int j = 0; j < nvars_; ++j) powers[j].push_back(constant(target_vars, 1));
  Polynomial out(target_vars);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target_vars, c);
    for (int j = 0; j < nvars_; ++j) {
      while (static_cast<int>(powers[j].size()) <= e[j]) powers[j].push_back(powers[j].back() * images[j]);
      if (e[j] > 0) term = term * powers[j][e[j]];
    }
    out += term;
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  if (static_cast<int>(values.size()) != nvars_) throw InputError("evaluate: point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int j = 0; j < nvars_; ++j)
      for (int k = 0; k < e[j]; ++k) t *= values[j];
    sum += t;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "g" + std::to_string(j + 1);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      out += flagcoh::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += flagcoh::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int nvars) : s_(text), n_(nvars) {}

  Polynomial parse_all() {
    Polynomial p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse polynomial '" + std::string(s_) + "': " + why);
  }
  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits at position " + std::to_string(start));
    return std::string(s_.substr(start, pos_ - start));
  }
  int small_int() {
    const std::string d = digits();
    if (d.size() > 6) fail("integer too large");
    return std::stoi(d);
  }

  Polynomial sum() {
    Polynomial acc(n_);
    bool negative = eat('-');
    if (!negative) eat('+');
    while (true) {
      Polynomial t = product();
      if (negative) acc -= t;
      else acc += t;
      if (eat('+')) negative = false;
      else if (eat('-')) negative = true;
      else break;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) base = base.pow(small_int());
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      Polynomial p = sum();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    const char c = s_[pos_];
    if (c == 'g' || c == 'G') {
      ++pos_;
      const int i = small_int();
      if (i < 1 || i > n_) fail("variable g" + std::to_string(i) + " out of range 1.." + std::to_string(n_));
      return Polynomial::variable(n_, i - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = digits();
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        lit += "/" + digits();
      }
      return Polynomial::constant(n_, parse_rational(lit));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int nvars) { return Parser(text, nvars).parse_all(); }

Polynomial act(const WeylGroup& group, std::size_t w, const Polynomial& f) {
  const int l = group.rank();
  if (f.num_vars() != l) throw InputError("act: polynomial has " + std::to_string(f.num_vars()) + " variables, group rank is " + std::to_string(l));
  const IntMatrix& m = group[w].matrix;
  std::vector<Polynomial> images;
  images.reserve(l);
  for (int j = 0; j < l; ++j) {
    IntVector col(l);
    for (int i = 0; i < l; ++i) col[i] = m[i * l + j];
    images.push_back(Polynomial::linear_form(col));
  }
  return f.substitute(images);
}

Polynomial reynolds(const WeylGroup& group, const Polynomial& f) {
  Polynomial sum(f.num_vars());
  for (std::size_t w = 0; w < group.order(); ++w) sum += act(group, w, f);
  return sum * Rational(1, group.order());
}

Polynomial average(const WeylGroup& group, const Subgroup& h, const Polynomial& f) {
  Polynomial sum(f.num_vars());
  for (std::size_t w : h.elements) sum += act(group, w, f);
  return sum * Rational(1, h.order());
}

Polynomial weyl_vector_product(const RootSystem& rs) {
  Polynomial d = Polynomial::constant(rs.rank(), 1);
  for (const auto& alpha : rs.indivisible_roots()) d = d * Polynomial::linear_form(alpha);
  return d;
}

}  // namespace flagcoh
