#include "flagcoh/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>

#include "flagcoh/errors.hpp"

namespace flagcoh {

namespace {

char family_letter(CartanFamily f) {
  switch (f) {
    case CartanFamily::A: return 'A';
    case CartanFamily::B: return 'B';
    case CartanFamily::C: return 'C';
    case CartanFamily::D: return 'D';
    case CartanFamily::E: return 'E';
    case CartanFamily::F: return 'F';
    case CartanFamily::G: return 'G';
    case CartanFamily::Custom: return '?';
  }
  return '?';
}

void check_type(CartanType t) {
  const int l = t.rank;
  bool ok = false;
  switch (t.family) {
    case CartanFamily::A: ok = l >= 1; break;
    case CartanFamily::B: ok = l >= 2; break;
    case CartanFamily::C: ok = l >= 2; break;
    case CartanFamily::D: ok = l >= 3; break;
    case CartanFamily::E: ok = l >= 6 && l <= 8; break;
    case CartanFamily::F: ok = l == 4; break;
    case CartanFamily::G: ok = l == 2; break;
    case CartanFamily::Custom: ok = false; break;
  }
  if (!ok) {
    std::string why = "invalid Cartan type " + t.name();
    switch (t.family) {
      case CartanFamily::A: why += " (A requires rank >= 1)"; break;
      case CartanFamily::B: why += " (B requires rank >= 2)"; break;
      case CartanFamily::C: why += " (C requires rank >= 2)"; break;
      case CartanFamily::D: why += " (D requires rank >= 3)"; break;
      case CartanFamily::E: why += " (E requires rank 6, 7 or 8)"; break;
      case CartanFamily::F: why += " (F requires rank 4)"; break;
      case CartanFamily::G: why += " (G requires rank 2)"; break;
      case CartanFamily::Custom: why += " (custom systems are loaded from data)"; break;
    }
    throw InputError(why);
  }
}

std::vector<int> degree_table(CartanType t) {
  const int l = t.rank;
  std::vector<int> d;
  switch (t.family) {
    case CartanFamily::A:
      for (int i = 2; i <= l + 1; ++i) d.push_back(i);
      break;
    case CartanFamily::B:
    case CartanFamily::C:
      for (int i = 1; i <= l; ++i) d.push_back(2 * i);
      break;
    case CartanFamily::D:
      for (int i = 1; i < l; ++i) d.push_back(2 * i);
      d.push_back(l);
      std::sort(d.begin(), d.end());
      break;
    case CartanFamily::E:
      if (l == 6) d = {2, 5, 6, 8, 9, 12};
      if (l == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (l == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case CartanFamily::F: d = {2, 6, 8, 12}; break;
    case CartanFamily::G: d = {2, 6}; break;
    case CartanFamily::Custom: break;
  }
  return d;
}

// Exponents from the height distribution of the indivisible positive roots:
// the number of exponents >= k equals the number of roots of height k.
std::vector<int> degrees_from_heights(const std::vector<IntVector>& roots) {
  std::vector<int> per_height;
  for (const auto& r : roots) {
    const int h = RootSystem::height(r);
    if (h >= static_cast<int>(per_height.size())) per_height.resize(h + 1, 0);
    ++per_height[h];
  }
  per_height.push_back(0);
  std::vector<int> d;
  for (std::size_t k = 1; k + 1 < per_height.size(); ++k) {
    const int count = per_height[k] - per_height[k + 1];
    if (count < 0) throw InputError("positive_roots: height distribution is not a partition");
    for (int c = 0; c < count; ++c) d.push_back(static_cast<int>(k) + 1);
  }
  std::sort(d.begin(), d.end());
  return d;
}

IntVector unit(int l, int i) {
  IntVector v(l, 0);
  v[i] = 1;
  return v;
}

IntVector negate(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

bool all_nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::string CartanType::name() const {
  if (family == CartanFamily::Custom) return "custom";
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw InputError("invalid Cartan type '" + std::string(text) + "'");
  std::string_view digits = text.substr(1);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)) || digits.size() > 3)
      throw InputError("invalid Cartan type '" + std::string(text) + "'");
  return parse(text.substr(0, 1), std::stoi(std::string(digits)));
}

CartanType CartanType::parse(std::string_view family, int rank) {
  if (family.size() != 1) throw InputError("invalid Cartan family '" + std::string(family) + "'");
  CartanType t;
  t.rank = rank;
  switch (std::toupper(static_cast<unsigned char>(family[0]))) {
    case 'A': t.family = CartanFamily::A; break;
    case 'B': t.family = CartanFamily::B; break;
    case 'C': t.family = CartanFamily::C; break;
    case 'D': t.family = CartanFamily::D; break;
    case 'E': t.family = CartanFamily::E; break;
    case 'F': t.family = CartanFamily::F; break;
    case 'G': t.family = CartanFamily::G; break;
    default: throw InputError("invalid Cartan family '" + std::string(family) + "'");
  }
  return t;
}

std::vector<IntVector> standard_cartan_matrix(CartanType t) {
  check_type(t);
  const int l = t.rank;
  std::vector<IntVector> a(l, IntVector(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.family) {
    case CartanFamily::A:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case CartanFamily::B:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      a[l - 1][l - 2] = -2;  // gamma_l short
      break;
    case CartanFamily::C:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      a[l - 2][l - 1] = -2;  // gamma_l long
      break;
    case CartanFamily::D:
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
      link(l - 3, l - 1);
      break;
    case CartanFamily::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < l; ++i) link(i, i + 1);
      break;
    case CartanFamily::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;  // gamma_1, gamma_2 long; gamma_3, gamma_4 short
      break;
    case CartanFamily::G:
      a[0][1] = -3;  // gamma_1 short
      a[1][0] = -1;
      break;
    case CartanFamily::Custom: break;
  }
  return a;
}

std::size_t expected_positive_count(CartanType t) {
  const std::size_t l = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case CartanFamily::A: return l * (l + 1) / 2;
    case CartanFamily::B:
    case CartanFamily::C: return l * l;
    case CartanFamily::D: return l * (l - 1);
    case CartanFamily::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
    case CartanFamily::F: return 24;
    case CartanFamily::G: return 6;
    case CartanFamily::Custom: return 0;
  }
  return 0;
}

int RootSystem::height(const IntVector& root) { return std::accumulate(root.begin(), root.end(), 0); }

RootSystem RootSystem::build(CartanType type) {
  const auto a = standard_cartan_matrix(type);
  const int l = type.rank;

  // Squared lengths from the symmetry of a_ij |gamma_i|^2; long roots get 2.
  std::vector<Rational> len(l, 0);
  len[0] = 1;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    const int i = todo.front();
    todo.pop();
    for (int j = 0; j < l; ++j) {
      if (j == i || a[i][j] == 0 || len[j] != 0) continue;
      len[j] = len[i] * a[i][j] / a[j][i];
      todo.push(j);
    }
  }
  const Rational longest = *std::max_element(len.begin(), len.end());
  for (auto& x : len) x = 2 * x / longest;

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = l;
  rs.cartan_ = a;
  rs.gram_.assign(l, RationalVector(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.gram_[i][j] = Rational(a[i][j]) * len[i] / 2;

  // Root strings: for a positive root beta and simple gamma_i with
  // beta - p gamma_i the bottom of the string, beta + gamma_i is a root
  // iff p - <beta, gamma_i^vee> > 0.
  std::vector<IntVector> roots;
  std::map<IntVector, std::size_t> seen;
  for (int i = 0; i < l; ++i) {
    seen.emplace(unit(l, i), roots.size());
    roots.push_back(unit(l, i));
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const IntVector beta = roots[k];
    for (int i = 0; i < l; ++i) {
      if (beta == unit(l, i)) continue;
      int p = 0;
      IntVector down = beta;
      while (true) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      int pairing = 0;
      for (int j = 0; j < l; ++j) pairing += beta[j] * a[i][j];
      if (p - pairing > 0) {
        IntVector up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          seen.emplace(up, roots.size());
          roots.push_back(up);
        }
      }
    }
  }
  rs.positive_ = std::move(roots);
  rs.finish(degree_table(type));
  if (rs.positive_.size() != expected_positive_count(type))
    throw ConsistencyError("root count mismatch for " + type.name());
  return rs;
}

RootSystem RootSystem::from_data(RationalMatrix gram, std::vector<IntVector> positive_roots,
                                 std::optional<std::vector<int>> degrees) {
  const std::size_t l = gram.size();
  if (l == 0) throw InputError("rank: must be positive");
  for (const auto& row : gram)
    if (row.size() != l) throw InputError("gram: must be a square rank x rank matrix");
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      if (gram[i][j] != gram[j][i]) throw InputError("gram: not symmetric");
  for (std::size_t k = 1; k <= l; ++k) {
    RationalMatrix minor(k, RationalVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = gram[i][j];
    if (determinant(minor) <= 0) throw InputError("gram: not positive definite (leading minor " + std::to_string(k) + ")");
  }

  RootSystem rs;
  rs.type_ = CartanType{CartanFamily::Custom, static_cast<int>(l)};
  rs.rank_ = static_cast<int>(l);
  rs.cartan_.assign(l, IntVector(l, 0));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      const Rational aij = 2 * gram[j][i] / gram[i][i];
      if (aij.get_den() != 1 || (i != j && aij > 0) || !aij.get_num().fits_sint_p())
        throw InputError("gram: Cartan integers 2<gamma_j,gamma_i>/<gamma_i,gamma_i> must be nonpositive integers off the diagonal");
      rs.cartan_[i][j] = static_cast<int>(aij.get_num().get_si());
    }

  std::map<IntVector, std::size_t> seen;
  for (const auto& r : positive_roots) {
    if (r.size() != l) throw InputError("positive_roots: every root needs rank coordinates");
    if (!all_nonnegative(r) || height(r) == 0)
      throw InputError("positive_roots: coordinates must be nonnegative and not all zero");
    if (!seen.emplace(r, 0).second) throw InputError("positive_roots: duplicate root");
  }
  for (std::size_t i = 0; i < l; ++i)
    if (!seen.count(unit(static_cast<int>(l), static_cast<int>(i))))
      throw InputError("positive_roots: simple root " + std::to_string(i + 1) + " missing");

  // Normalise so the longest indivisible root has squared length 2.
  rs.gram_ = gram;
  Rational longest = 0;
  for (const auto& r : positive_roots) {
    IntVector half = r;
    bool even = true;
    for (auto& x : half) {
      even = even && x % 2 == 0;
      x /= 2;
    }
    if (even && seen.count(half)) continue;
    longest = std::max(longest, rs.inner(r, r));
  }
  for (auto& row : rs.gram_)
    for (auto& x : row) x = 2 * x / longest;

  rs.positive_ = std::move(positive_roots);
  for (const auto& r : rs.positive_)
    for (int i = 0; i < rs.rank_; ++i) {
      const IntVector s = rs.simple_reflect(i, r);
      if (s == negate(r)) continue;
      if (!seen.count(s) && !seen.count(negate(s)))
        throw InputError("positive_roots: not closed under the simple reflections");
    }
  rs.finish(std::move(degrees));
  return rs;
}

void RootSystem::finish(std::optional<std::vector<int>> degrees) {
  std::sort(positive_.begin(), positive_.end(), [](const IntVector& x, const IntVector& y) {
    const int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  index_.clear();
  for (std::size_t k = 0; k < positive_.size(); ++k) index_.emplace(positive_[k], k);

  indivisible_.clear();
  indivisible_flag_.assign(positive_.size(), true);
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    IntVector half = positive_[k];
    bool even = true;
    for (auto& x : half) {
      even = even && x % 2 == 0;
      x /= 2;
    }
    if (even && index_.count(half)) indivisible_flag_[k] = false;
    if (indivisible_flag_[k]) indivisible_.push_back(positive_[k]);
  }

  std::vector<std::size_t> parent(positive_.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t k = 0; k < positive_.size(); ++k)
    for (int i = 0; i < rank_; ++i) {
      IntVector s = simple_reflect(i, positive_[k]);
      if (!all_nonnegative(s)) s = negate(s);
      const auto it = index_.find(s);
      if (it == index_.end()) continue;
      parent[find_root(parent, k)] = find_root(parent, it->second);
    }
  orbit_of_.assign(positive_.size(), 0);
  std::map<std::size_t, std::size_t> label;
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    const std::size_t r = find_root(parent, k);
    auto [it, fresh] = label.emplace(r, label.size());
    orbit_of_[k] = it->second;
  }
  num_orbits_ = label.size();

  degrees_ = degrees ? std::move(*degrees) : degrees_from_heights(indivisible_);
  if (static_cast<int>(degrees_.size()) != rank_) throw InputError("degrees: need exactly rank entries");
  if (std::accumulate(degrees_.begin(), degrees_.end(), 0) != static_cast<int>(indivisible_.size()) + rank_)
    throw InputError("degrees: sum must equal N + rank");
}

std::optional<std::size_t> RootSystem::find_positive(const IntVector& v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const IntVector& v) const {
  return index_.count(v) > 0 || index_.count(negate(v)) > 0;
}

Rational RootSystem::inner(const RationalVector& x, const RationalVector& y) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += x[i] * gram_[i][j] * y[j];
  }
  return s;
}

Rational RootSystem::inner(const IntVector& x, const IntVector& y) const {
  return inner(to_rational(x), to_rational(y));
}

RationalVector RootSystem::reflect(const IntVector& alpha, const RationalVector& x) const {
  if (static_cast<int>(alpha.size()) != rank_ || !is_root(alpha))
    throw InputError("reflect: not a root of this system");
  if (static_cast<int>(x.size()) != rank_) throw InputError("reflect: vector has wrong dimension");
  const RationalVector a = to_rational(alpha);
  const Rational c = 2 * inner(x, a) / inner(a, a);
  RationalVector out = x;
  for (int i = 0; i < rank_; ++i) out[i] -= c * a[i];
  return out;
}

IntVector RootSystem::reflect(const IntVector& alpha, const IntVector& x) const {
  const RationalVector r = reflect(alpha, to_rational(x));
  IntVector out(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (r[i].get_den() != 1) throw ConsistencyError("reflect: integral vector left the root lattice");
    out[i] = static_cast<int>(r[i].get_num().get_si());
  }
  return out;
}

IntVector RootSystem::simple_reflect(int i, const IntVector& x) const {
  int pairing = 0;
  for (int j = 0; j < rank_; ++j) pairing += x[j] * cartan_[i][j];
  IntVector out = x;
  out[i] -= pairing;
  return out;
}

MultiplicityTable MultiplicityTable::uniform(const RootSystem& rs, int m) {
  if (m < 1) throw InputError("multiplicity must be >= 1, got " + std::to_string(m));
  MultiplicityTable t;
  t.per_root_.assign(rs.positive_roots().size(), m);
  return t;
}

MultiplicityTable MultiplicityTable::from_orbits(const RootSystem& rs,
                                                 std::span<const std::pair<IntVector, int>> entries) {
  std::vector<int> per_orbit(rs.num_orbits(), 0);
  for (const auto& [root, m] : entries) {
    const auto idx = rs.find_positive(root);
    if (!idx) throw InputError("multiplicities: entry is not a positive root");
    if (m < 1) throw InputError("multiplicities: values must be >= 1");
    int& slot = per_orbit[rs.root_orbit()[*idx]];
    if (slot != 0 && slot != m) throw InputError("multiplicities: non-constant on a W-orbit of roots");
    slot = m;
  }
  MultiplicityTable t;
  t.per_root_.resize(rs.positive_roots().size());
  for (std::size_t k = 0; k < t.per_root_.size(); ++k) {
    t.per_root_[k] = per_orbit[rs.root_orbit()[k]];
    if (t.per_root_[k] == 0 && rs.is_indivisible(k))
      throw InputError("multiplicities: orbit of root " + std::to_string(k) + " left uncovered");
  }
  return t;
}

std::optional<int> MultiplicityTable::uniform_value() const {
  std::optional<int> v;
  for (int m : per_root_) {
    if (m == 0) continue;
    if (v && *v != m) return std::nullopt;
    v = m;
  }
  return v;
}

int MultiplicityTable::min_value() const {
  int best = 0;
  for (int m : per_root_)
    if (m > 0 && (best == 0 || m < best)) best = m;
  return best;
}

bool MultiplicityTable::coinvariant_regime() const {
  const auto m = uniform_value();
  return m && (*m == 2 || *m == 4 || *m == 8);
}

RootSystemAudit audit(const RootSystem& rs) {
  RootSystemAudit a;
  const int l = rs.rank();
  for (const auto& r : rs.positive_roots()) a.positive_coordinates = a.positive_coordinates && all_nonnegative(r);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const int c = rs.cartan()[i][j];
      if ((i == j && c != 2) || (i != j && c > 0)) a.cartan_shape = false;
      if (Rational(c) != 2 * rs.gram()[j][i] / rs.gram()[i][i]) a.cartan_shape = false;
    }
  for (const auto& r : rs.positive_roots())
    for (int i = 0; i < l; ++i) {
      const IntVector s = rs.simple_reflect(i, r);
      if (!rs.is_root(s)) a.reflection_closed = false;
    }
  for (int k = 1; k <= l; ++k) {
    RationalMatrix minor(k, RationalVector(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = rs.gram()[i][j];
    if (determinant(minor) <= 0) a.gram_positive_definite = false;
  }
  const int sum = std::accumulate(rs.degrees().begin(), rs.degrees().end(), 0);
  a.degree_sum = sum == static_cast<int>(rs.num_positive()) + l;
  return a;
}

}  // namespace flagcoh
