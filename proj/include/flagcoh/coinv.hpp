#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "flagcoh/divdiff.hpp"
#include "flagcoh/polyring.hpp"
#include "flagcoh/weyl.hpp"

namespace flagcoh {

using Series = std::vector<std::int64_t>;  // coefficient of t^k at index k

// A subspace of S^k given by a basis in the monomial basis of S^k.
struct GradedSlice {
  int degree = 0;
  std::vector<Exponents> monomials;  // basis of S^k, grlex-descending
  std::vector<Polynomial> basis;     // echelon form, primitive integer coefficients
  EchelonBasis echelon{0};           // same span, for membership tests
  std::size_t dimension() const { return basis.size(); }
  std::size_t ambient_dimension() const { return monomials.size(); }
};

struct HillerResult {
  bool d_in_ideal = false;  // d = prod of positive roots lies in I^N
  bool equals_coinvariant_ideal() const { return !d_in_ideal; }
};

// The ideal I_W generated by nonconstant W-invariants, handled degree by
// degree with exact linear algebra, and the coinvariant algebra S/I_W.
// Slices are computed on demand and cached; the object can be shared between
// threads.
class CoinvariantAlgebra {
 public:
  // degree_cap < 0 selects the default N + 2.
  CoinvariantAlgebra(const WeylGroup& group, const DividedDifferences& dd, int degree_cap = -1);

  const WeylGroup& group() const { return group_; }
  int degree_cap() const { return cap_; }
  int top_degree() const { return static_cast<int>(group_.roots().num_positive()); }

  // W-invariants of degree j (Reynolds images of the monomials, reduced).
  const GradedSlice& invariants(int j) const;
  // I_W^k = sum_{1<=j<=k} S^{k-j} * invariants(j).
  const GradedSlice& ideal_slice(int k) const;

  // Exact membership of a homogeneous polynomial in I_W.
  bool contains(const Polynomial& f) const;

  // dim S^k - dim I_W^k for k = 0..N.
  Series poincare_series() const;

  const Polynomial& weyl_vector_product() const;
  // c = Delta_{w0}(d), a nonzero constant.
  const Rational& top_constant() const;

  // Elements w with l(w) = N - k, in group order, and the polynomials
  // Delta_w(d). Throws ConsistencyError if they fail to be independent or to
  // complement I_W^k.
  std::vector<std::size_t> harmonic_index(int k) const;
  std::vector<Polynomial> harmonic_basis(int k) const;

  // Coordinates of f in S^k/I_W^k w.r.t. harmonic_basis(k): the coefficient
  // of Delta_v(d) is Delta_{w0 v^{-1}}(f) / c.
  RationalVector harmonic_coordinates(const Polynomial& f) const;

  // Per-degree dimension of the H-invariants in S/I_W, k = 0..N.
  Series invariant_quotient_series(const Subgroup& h) const;

  // I = I_W + <extra>: is d in I? Generators must be homogeneous.
  HillerResult hiller_criterion(std::span<const Polynomial> extra) const;

 private:
  void check_cap(int k) const;

  const WeylGroup& group_;
  const DividedDifferences& dd_;
  int cap_;
  mutable std::once_flag top_once_;
  mutable Polynomial d_;
  mutable Rational top_constant_;
  mutable std::mutex mutex_;
  mutable std::map<int, GradedSlice> invariants_;
  mutable std::map<int, GradedSlice> ideal_;
};

// prod_j (1 + t + ... + t^{d_j - 1})
Series degree_product_series(std::span<const int> degrees);
// sum_w t^{l(w)}
Series length_census(const WeylGroup& group);

// Matrix of s_j on the basis tau_1..tau_l of degree-m classes:
// s_j(tau_i) = tau_i - a_ji tau_j. Row-major, column i = image of tau_i.
IntMatrix euler_rep(const RootSystem& rs, int j);
// Matrix of s_i on the sphere classes [S_1]..[S_l]:
// s_i[S_j] = [S_j] - a_ji [S_i]. Row-major, column j = image of [S_j].
IntMatrix sphere_rep(const RootSystem& rs, int i);
// P_ij = <tau_i, [S_j]> = a_ji.
IntMatrix pairing_matrix(const RootSystem& rs);

struct RepresentationCheck {
  bool involutions = true;   // s^2 = 1
  bool braid = true;         // (s_i s_j)^{m_ij} braid words agree
  bool pairing = true;       // E^T P S = P and E^T P = P S
  bool ok() const { return involutions && braid && pairing; }
};
RepresentationCheck check_representations(const RootSystem& rs);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b, int n);
IntMatrix transpose(const IntMatrix& a, int n);

}  // namespace flagcoh
