#include "flagcoh/linalg.hpp"

#include <algorithm>
#include <utility>

#include "flagcoh/errors.hpp"

namespace flagcoh {

namespace {

void strip_content(IntegerVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::size_t first_nonzero(const IntegerVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

IntegerVector clear_denominators(const RationalVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntegerVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  return out;
}

// Bareiss elimination in place; returns rank and the sign/last pivot so the
// determinant can be recovered for square input.
std::size_t bareiss(std::vector<IntegerVector>& a, int& sign, Integer& last_pivot) {
  sign = 1;
  last_pivot = 1;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  last_pivot = prev;
  return r;
}

}  // namespace

IntegerVector primitive_part(const RationalVector& v) {
  IntegerVector out = clear_denominators(v);
  strip_content(out);
  const std::size_t lead = first_nonzero(out);
  if (lead < out.size() && out[lead] < 0)
    for (auto& x : out) x = -x;
  return out;
}

IntegerVector EchelonBasis::reduce(IntegerVector v) const {
  for (const Row& row : rows_) {
    if (v[row.pivot] == 0) continue;
    const Integer a = row.coeffs[row.pivot];
    const Integer b = v[row.pivot];
    for (std::size_t j = 0; j < dim_; ++j) v[j] = a * v[j] - b * row.coeffs[j];
    strip_content(v);
  }
  return v;
}

bool EchelonBasis::insert(const RationalVector& v) {
  if (v.size() != dim_) throw ConsistencyError("echelon insert: dimension mismatch");
  IntegerVector r = reduce(primitive_part(v));
  const std::size_t p = first_nonzero(r);
  if (p == dim_) return false;
  if (r[p] < 0)
    for (auto& x : r) x = -x;
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                              [](const Row& row, std::size_t piv) { return row.pivot < piv; });
  rows_.insert(pos, Row{std::move(r), p});
  return true;
}

bool EchelonBasis::contains(const RationalVector& v) const {
  if (v.size() != dim_) throw ConsistencyError("echelon contains: dimension mismatch");
  const IntegerVector r = reduce(primitive_part(v));
  return first_nonzero(r) == dim_;
}

std::vector<RationalVector> EchelonBasis::rows() const {
  std::vector<RationalVector> out;
  out.reserve(rows_.size());
  for (const Row& row : rows_) out.emplace_back(row.coeffs.begin(), row.coeffs.end());
  return out;
}

std::size_t rank(const RationalMatrix& rows) {
  if (rows.empty()) return 0;
  std::vector<IntegerVector> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw ConsistencyError("rank: ragged matrix");
    a.push_back(clear_denominators(r));
  }
  int sign;
  Integer piv;
  return bareiss(a, sign, piv);
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer scale = 1;
  std::vector<IntegerVector> a;
  for (const auto& r : m) {
    if (r.size() != n) throw ConsistencyError("determinant: matrix not square");
    Integer l = 1;
    for (const auto& q : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    scale *= l;
    IntegerVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = r[j].get_num() * (l / r[j].get_den());
    a.push_back(std::move(row));
  }
  int sign;
  Integer piv;
  if (bareiss(a, sign, piv) < n) return 0;
  Rational d(sign * piv, scale);
  d.canonicalize();
  return d;
}

}  // namespace flagcoh
