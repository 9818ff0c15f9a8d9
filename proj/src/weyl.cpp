#include "flagcoh/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "flagcoh/errors.hpp"

namespace flagcoh {

std::size_t WeylGroup::MatrixHash::operator()(const IntMatrix& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : m) {
    h ^= static_cast<std::size_t>(x + 0x9e37);
    h *= 1099511628211ull;
  }
  return h;
}

int coxeter_order(int aij, int aji) {
  switch (aij * aji) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw InputError("Cartan entries do not define a finite Weyl group");
}

WeylGroup::WeylGroup(RootSystem roots, std::size_t bound) : roots_(std::move(roots)) {
  const int l = roots_.rank();
  const auto& a = roots_.cartan();

  std::vector<IntMatrix> gens(l);
  for (int i = 0; i < l; ++i) {
    IntMatrix s(l * l, 0);
    for (int j = 0; j < l; ++j) {
      s[j * l + j] = 1;
      s[i * l + j] -= a[i][j];  // s_i(gamma_j) = gamma_j - a_ij gamma_i
    }
    gens[i] = std::move(s);
  }

  IntMatrix id(l * l, 0);
  for (int i = 0; i < l; ++i) id[i * l + i] = 1;
  elements_.push_back({id, {}});
  index_.emplace(id, 0);

  // Breadth-first, right multiplication by s_1..s_l in index order: the first
  // word reaching an element is its lexicographically smallest reduced word.
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (int i = 0; i < l; ++i) {
      IntMatrix m = product(elements_[k].matrix, gens[i]);
      if (index_.count(m)) continue;
      if (elements_.size() >= bound)
        throw LimitError("Weyl group of " + roots_.type().name() + " exceeds the enumeration bound of " +
                         std::to_string(bound) + " elements");
      Word word = elements_[k].word;
      word.push_back(i);
      index_.emplace(m, elements_.size());
      elements_.push_back({std::move(m), std::move(word)});
    }
  }

  generators_.resize(l);
  for (int i = 0; i < l; ++i) generators_[i] = index_.at(gens[i]);
  longest_ = elements_.size() - 1;  // BFS order ends at the unique element of maximal length

  inverse_.resize(elements_.size());
  for (std::size_t w = 0; w < elements_.size(); ++w) {
    Word rev(elements_[w].word.rbegin(), elements_[w].word.rend());
    inverse_[w] = from_word(rev);
  }
}

IntMatrix WeylGroup::product(const IntMatrix& x, const IntMatrix& y) const {
  const int l = roots_.rank();
  IntMatrix out(l * l, 0);
  for (int i = 0; i < l; ++i)
    for (int k = 0; k < l; ++k) {
      const int xik = x[i * l + k];
      if (xik == 0) continue;
      for (int j = 0; j < l; ++j) out[i * l + j] += xik * y[k * l + j];
    }
  return out;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  return index_.at(product(elements_[a].matrix, elements_[b].matrix));
}

std::optional<std::size_t> WeylGroup::find(const IntMatrix& m) const {
  const auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeylGroup::from_word(std::span<const int> word) const {
  IntMatrix m = elements_[0].matrix;
  for (int i : word) {
    if (i < 0 || i >= rank()) throw InputError("word letter " + std::to_string(i + 1) + " out of range");
    m = product(m, elements_[generators_[i]].matrix);
  }
  return index_.at(m);
}

std::size_t WeylGroup::reflection(const IntVector& alpha) const {
  const int l = rank();
  IntMatrix m(l * l);
  for (int j = 0; j < l; ++j) {
    IntVector e(l, 0);
    e[j] = 1;
    const IntVector img = roots_.reflect(alpha, e);
    for (int i = 0; i < l; ++i) m[i * l + j] = img[i];
  }
  const auto w = find(m);
  if (!w) throw ConsistencyError("reflection not found in the enumerated group");
  return *w;
}

IntVector WeylGroup::apply(std::size_t w, const IntVector& x) const {
  const int l = rank();
  const IntMatrix& m = elements_[w].matrix;
  IntVector out(l, 0);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) out[i] += m[i * l + j] * x[j];
  return out;
}

RationalVector WeylGroup::apply(std::size_t w, const RationalVector& x) const {
  const int l = rank();
  const IntMatrix& m = elements_[w].matrix;
  RationalVector out(l, 0);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (m[i * l + j] != 0) out[i] += m[i * l + j] * x[j];
  return out;
}

RationalVector WeylGroup::apply_to_point(std::size_t w, const RationalVector& values) const {
  // gamma_i(w.x) = (w^{-1} gamma_i)(x)
  const int l = rank();
  if (static_cast<int>(values.size()) != l) throw InputError("point has wrong dimension");
  const IntMatrix& m = elements_[inverse_[w]].matrix;
  RationalVector out(l, 0);
  for (int i = 0; i < l; ++i)
    for (int k = 0; k < l; ++k)
      if (m[k * l + i] != 0) out[i] += m[k * l + i] * values[k];
  return out;
}

int WeylGroup::inversion_count(std::size_t w) const {
  int count = 0;
  for (const auto& r : roots_.indivisible_roots()) {
    const IntVector img = apply(w, r);
    if (std::any_of(img.begin(), img.end(), [](int x) { return x < 0; })) ++count;
  }
  return count;
}

bool WeylGroup::is_right_descent(std::size_t w, int i) const {
  IntVector e(rank(), 0);
  e[i] = 1;
  const IntVector img = apply(w, e);
  return std::any_of(img.begin(), img.end(), [](int x) { return x < 0; });
}

std::vector<Word> WeylGroup::reduced_words(std::size_t w) const {
  std::map<std::size_t, std::vector<Word>> memo;
  std::function<const std::vector<Word>&(std::size_t)> rec = [&](std::size_t u) -> const std::vector<Word>& {
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    std::vector<Word> out;
    if (u == identity()) {
      out.push_back({});
    } else {
      for (int i = 0; i < rank(); ++i) {
        if (!is_right_descent(u, i)) continue;
        for (Word word : rec(multiply(u, generators_[i]))) {
          word.push_back(i);
          out.push_back(std::move(word));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return memo.emplace(u, std::move(out)).first->second;
  };
  return rec(w);
}

Subgroup WeylGroup::generated_by(std::vector<int> gens) const {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Subgroup h;
  h.generators = gens;
  std::vector<bool> in(order(), false);
  std::deque<std::size_t> todo{identity()};
  in[identity()] = true;
  while (!todo.empty()) {
    const std::size_t u = todo.front();
    todo.pop_front();
    h.elements.push_back(u);
    for (int i : gens) {
      const std::size_t v = multiply(u, generators_.at(i));
      if (!in[v]) {
        in[v] = true;
        todo.push_back(v);
      }
    }
  }
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

Subgroup WeylGroup::stabilizer(const RationalVector& x0) const {
  if (static_cast<int>(x0.size()) != rank())
    throw InputError("x0 needs " + std::to_string(rank()) + " simple-root values");
  std::vector<int> gens;
  for (int i = 0; i < rank(); ++i) {
    if (x0[i] < 0)
      throw InputError("x0 lies outside the closed positive chamber (gamma_" + std::to_string(i + 1) +
                       "(x0) < 0); move it into the chamber first");
    if (x0[i] == 0) gens.push_back(i);
  }
  return generated_by(std::move(gens));
}

}  // namespace flagcoh
