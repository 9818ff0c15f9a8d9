#include "flagcoh/coinv.hpp"

#include <algorithm>

#include "flagcoh/errors.hpp"
#include "flagcoh/linalg.hpp"

namespace flagcoh {

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t dim_homogeneous(int nvars, int k) { return binomial(k + nvars - 1, nvars - 1); }

GradedSlice make_slice(int degree, std::vector<Exponents> monomials, EchelonBasis echelon) {
  GradedSlice s;
  s.degree = degree;
  for (const auto& row : echelon.rows()) s.basis.push_back(Polynomial::from_coordinates(monomials, row));
  s.monomials = std::move(monomials);
  s.echelon = std::move(echelon);
  return s;
}

}  // namespace

CoinvariantAlgebra::CoinvariantAlgebra(const WeylGroup& group, const DividedDifferences& dd, int degree_cap)
    : group_(group), dd_(dd), cap_(degree_cap < 0 ? static_cast<int>(group.roots().num_positive()) + 2 : degree_cap) {}

const Polynomial& CoinvariantAlgebra::weyl_vector_product() const {
  std::call_once(top_once_, [this] {
    d_ = flagcoh::weyl_vector_product(group_.roots());
    const Polynomial c = dd_.along_word(group_[group_.longest()].word, d_);
    if (c.is_zero() || c.degree() != 0) throw ConsistencyError("Delta_{w0}(d) is not a nonzero constant");
    top_constant_ = c.terms().begin()->second;
  });
  return d_;
}

const Rational& CoinvariantAlgebra::top_constant() const {
  weyl_vector_product();
  return top_constant_;
}

void CoinvariantAlgebra::check_cap(int k) const {
  if (k > cap_)
    throw LimitError("degree " + std::to_string(k) + " exceeds the configured degree cap " + std::to_string(cap_));
}

const GradedSlice& CoinvariantAlgebra::invariants(int j) const {
  check_cap(j);
  {
    std::lock_guard lock(mutex_);
    if (auto it = invariants_.find(j); it != invariants_.end()) return it->second;
  }
  auto monomials = monomials_of_degree(group_.rank(), j);
  EchelonBasis echelon(monomials.size());
  for (const auto& e : monomials) echelon.insert(reynolds(group_, Polynomial::monomial(e)).coordinates(monomials));
  GradedSlice slice = make_slice(j, std::move(monomials), std::move(echelon));
  std::lock_guard lock(mutex_);
  return invariants_.try_emplace(j, std::move(slice)).first->second;
}

const GradedSlice& CoinvariantAlgebra::ideal_slice(int k) const {
  check_cap(k);
  {
    std::lock_guard lock(mutex_);
    if (auto it = ideal_.find(k); it != ideal_.end()) return it->second;
  }
  const int l = group_.rank();
  auto monomials = monomials_of_degree(l, k);
  EchelonBasis echelon(monomials.size());
  for (int j = 1; j <= k && !echelon.is_full(); ++j) {
    const GradedSlice& inv = invariants(j);
    for (const auto& e : monomials_of_degree(l, k - j)) {
      const Polynomial mu = Polynomial::monomial(e);
      for (const auto& g : inv.basis) {
        echelon.insert((mu * g).coordinates(monomials));
        if (echelon.is_full()) break;
      }
      if (echelon.is_full()) break;
    }
  }
  GradedSlice slice = make_slice(k, std::move(monomials), std::move(echelon));
  std::lock_guard lock(mutex_);
  return ideal_.try_emplace(k, std::move(slice)).first->second;
}

bool CoinvariantAlgebra::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) throw InputError("contains: polynomial is not homogeneous");
  const GradedSlice& slice = ideal_slice(f.degree());
  return slice.echelon.contains(f.coordinates(slice.monomials));
}

Series CoinvariantAlgebra::poincare_series() const {
  Series s;
  for (int k = 0; k <= top_degree(); ++k)
    s.push_back(dim_homogeneous(group_.rank(), k) - static_cast<std::int64_t>(ideal_slice(k).dimension()));
  return s;
}

std::vector<std::size_t> CoinvariantAlgebra::harmonic_index(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < group_.order(); ++w)
    if (group_[w].length() == top_degree() - k) out.push_back(w);
  return out;
}

std::vector<Polynomial> CoinvariantAlgebra::harmonic_basis(int k) const {
  if (k < 0 || k > top_degree()) throw InputError("harmonic basis degree must lie in 0..N");
  const Polynomial& d = weyl_vector_product();
  std::vector<Polynomial> out;
  for (std::size_t w : harmonic_index(k)) out.push_back(dd_.delta(w, d));

  const GradedSlice& ideal = ideal_slice(k);
  RationalMatrix rows;
  for (const auto& p : out) rows.push_back(p.coordinates(ideal.monomials));
  if (rank(rows) != out.size()) throw ConsistencyError("harmonic polynomials of degree " + std::to_string(k) + " are dependent");
  for (const auto& p : ideal.basis) rows.push_back(p.coordinates(ideal.monomials));
  if (rank(rows) != out.size() + ideal.dimension())
    throw ConsistencyError("harmonic polynomials of degree " + std::to_string(k) + " meet the ideal");
  return out;
}

RationalVector CoinvariantAlgebra::harmonic_coordinates(const Polynomial& f) const {
  if (!f.is_homogeneous()) throw InputError("harmonic_coordinates: polynomial is not homogeneous");
  const int k = f.is_zero() ? 0 : f.degree();
  if (k > top_degree()) throw InputError("harmonic_coordinates: degree exceeds N");
  const Rational& c = top_constant();
  RationalVector out;
  for (std::size_t v : harmonic_index(k)) {
    const std::size_t u = group_.multiply(group_.longest(), group_.inverse(v));
    const Polynomial lam = dd_.delta(u, f);
    if (!lam.is_zero() && lam.degree() != 0) throw ConsistencyError("extraction did not produce a constant");
    out.push_back(lam.coefficient(Exponents(group_.rank(), 0)) / c);
  }
  return out;
}

Series CoinvariantAlgebra::invariant_quotient_series(const Subgroup& h) const {
  Series s;
  for (int k = 0; k <= top_degree(); ++k) {
    const GradedSlice& ideal = ideal_slice(k);
    EchelonBasis echelon = ideal.echelon;
    std::int64_t dim = 0;
    for (const auto& p : harmonic_basis(k))
      if (echelon.insert(average(group_, h, p).coordinates(ideal.monomials))) ++dim;
    s.push_back(dim);
  }
  return s;
}

HillerResult CoinvariantAlgebra::hiller_criterion(std::span<const Polynomial> extra) const {
  const int n = top_degree();
  const GradedSlice& ideal = ideal_slice(n);
  EchelonBasis echelon = ideal.echelon;
  for (const auto& g : extra) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw InputError("hiller_criterion: generators must be homogeneous");
    if (g.degree() > n) continue;  // I_W already contains all of S^k for k > N
    for (const auto& e : monomials_of_degree(group_.rank(), n - g.degree()))
      echelon.insert((Polynomial::monomial(e) * g).coordinates(ideal.monomials));
  }
  HillerResult r;
  r.d_in_ideal = echelon.contains(weyl_vector_product().coordinates(ideal.monomials));
  return r;
}

Series degree_product_series(std::span<const int> degrees) {
  Series s{1};
  for (int d : degrees) {
    Series next(s.size() + d - 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (int j = 0; j < d; ++j) next[i + j] += s[i];
    s = std::move(next);
  }
  return s;
}

Series length_census(const WeylGroup& group) {
  Series s(group.roots().num_positive() + 1, 0);
  for (const auto& w : group.elements()) ++s.at(w.length());
  return s;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b, int n) {
  IntMatrix out(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) out[i * n + j] += a[i * n + k] * b[k * n + j];
  return out;
}

IntMatrix transpose(const IntMatrix& a, int n) {
  IntMatrix out(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[j * n + i] = a[i * n + j];
  return out;
}

IntMatrix euler_rep(const RootSystem& rs, int j) {
  const int l = rs.rank();
  if (j < 0 || j >= l) throw InputError("euler_rep: index out of range");
  IntMatrix m(l * l, 0);
  for (int i = 0; i < l; ++i) {
    m[i * l + i] += 1;
    m[j * l + i] -= rs.cartan()[j][i];
  }
  return m;
}

IntMatrix sphere_rep(const RootSystem& rs, int i) {
  const int l = rs.rank();
  if (i < 0 || i >= l) throw InputError("sphere_rep: index out of range");
  IntMatrix m(l * l, 0);
  for (int j = 0; j < l; ++j) {
    m[j * l + j] += 1;
    m[i * l + j] -= rs.cartan()[j][i];
  }
  return m;
}

IntMatrix pairing_matrix(const RootSystem& rs) {
  const int l = rs.rank();
  IntMatrix p(l * l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) p[i * l + j] = rs.cartan()[j][i];
  return p;
}

RepresentationCheck check_representations(const RootSystem& rs) {
  const int l = rs.rank();
  IntMatrix id(l * l, 0);
  for (int i = 0; i < l; ++i) id[i * l + i] = 1;
  std::vector<IntMatrix> e, s;
  for (int i = 0; i < l; ++i) {
    e.push_back(euler_rep(rs, i));
    s.push_back(sphere_rep(rs, i));
  }
  RepresentationCheck r;
  for (int i = 0; i < l; ++i)
    if (matmul(e[i], e[i], l) != id || matmul(s[i], s[i], l) != id) r.involutions = false;

  auto braid_holds = [&](const std::vector<IntMatrix>& g, int i, int j, int m) {
    IntMatrix x = id, y = id;
    for (int k = 0; k < m; ++k) {
      x = matmul(x, g[k % 2 == 0 ? i : j], l);
      y = matmul(y, g[k % 2 == 0 ? j : i], l);
    }
    return x == y;
  };
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      const int m = coxeter_order(rs.cartan()[i][j], rs.cartan()[j][i]);
      if (!braid_holds(e, i, j, m) || !braid_holds(s, i, j, m)) r.braid = false;
    }

  const IntMatrix p = pairing_matrix(rs);
  for (int k = 0; k < l; ++k) {
    const IntMatrix et = transpose(e[k], l);
    if (matmul(matmul(et, p, l), s[k], l) != p) r.pairing = false;
    if (matmul(et, p, l) != matmul(p, s[k], l)) r.pairing = false;
  }
  return r;
}

}  // namespace flagcoh
