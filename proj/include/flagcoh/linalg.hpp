#pragma once

#include <cstddef>
#include <vector>

#include "flagcoh/rational.hpp"

namespace flagcoh {

using IntegerVector = std::vector<Integer>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

// Scale a rational vector to an integer vector with content 1 and positive
// leading entry. The zero vector maps to zero.
IntegerVector primitive_part(const RationalVector& v);

// Incrementally built row echelon basis over the rationals, stored as
// primitive integer rows. Elimination is fraction-free: a reduction step
// replaces v by piv*v - v[p]*row and then strips the content.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient_dim) : dim_(ambient_dim) {}

  // Returns true if v was independent of the current span (rank grows).
  bool insert(const RationalVector& v);
  bool contains(const RationalVector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dimension() const { return dim_; }
  bool is_full() const { return rows_.size() == dim_; }

  // Rows in increasing pivot order.
  std::vector<RationalVector> rows() const;

 private:
  struct Row {
    IntegerVector coeffs;
    std::size_t pivot;
  };
  IntegerVector reduce(IntegerVector v) const;

  std::size_t dim_;
  std::vector<Row> rows_;
};

// Rank by Bareiss fraction-free elimination (rows are cleared of
// denominators first). Independent of EchelonBasis.
std::size_t rank(const RationalMatrix& rows);

// Determinant of a square matrix, Bareiss.
Rational determinant(const RationalMatrix& m);

}  // namespace flagcoh
