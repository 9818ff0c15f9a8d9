#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "flagcoh/rational.hpp"
#include "flagcoh/rootsys.hpp"

namespace flagcoh {

// Row-major l x l integer matrix; column j holds the coordinates of w(gamma_j).
using IntMatrix = std::vector<int>;
using Word = std::vector<int>;  // 0-based simple reflection indices, w = s_{i1} ... s_{ik}

struct WeylElement {
  IntMatrix matrix;
  Word word;  // lexicographically smallest reduced word
  int length() const { return static_cast<int>(word.size()); }
};

struct Subgroup {
  std::vector<int> generators;        // simple reflection indices
  std::vector<std::size_t> elements;  // indices into the parent group, ascending
  std::size_t order() const { return elements.size(); }
};

inline constexpr std::size_t kDefaultGroupBound = 1'000'000;

// The Weyl group of a root system, fully enumerated by breadth-first closure
// over the simple reflections. Elements are indexed in (length, word) order,
// so index 0 is the identity.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem roots, std::size_t bound = kDefaultGroupBound);

  const RootSystem& roots() const { return roots_; }
  int rank() const { return roots_.rank(); }
  std::size_t order() const { return elements_.size(); }
  const WeylElement& operator[](std::size_t w) const { return elements_[w]; }
  std::span<const WeylElement> elements() const { return elements_; }

  static constexpr std::size_t identity() { return 0; }
  std::size_t generator(int i) const { return generators_[i]; }
  std::size_t longest() const { return longest_; }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t w) const { return inverse_[w]; }
  std::optional<std::size_t> find(const IntMatrix& m) const;
  std::size_t from_word(std::span<const int> word) const;
  // The reflection s_alpha for a root alpha.
  std::size_t reflection(const IntVector& alpha) const;

  // w acting on a* (simple-root coordinates).
  IntVector apply(std::size_t w, const IntVector& x) const;
  RationalVector apply(std::size_t w, const RationalVector& x) const;
  // Simple-root values (gamma_i(w.x))_i of w.x for x with values gamma_i(x).
  RationalVector apply_to_point(std::size_t w, const RationalVector& values) const;

  // Number of positive roots sent to negative roots.
  int inversion_count(std::size_t w) const;
  bool is_right_descent(std::size_t w, int i) const;

  // Every reduced word of w, in lexicographic order.
  std::vector<Word> reduced_words(std::size_t w) const;

  Subgroup generated_by(std::vector<int> generators) const;
  // W-stabilizer of a point in the closed positive chamber, given by its
  // simple-root values (all >= 0). Generated by the s_i with gamma_i(x0) = 0.
  Subgroup stabilizer(const RationalVector& x0) const;

 private:
  struct MatrixHash {
    std::size_t operator()(const IntMatrix& m) const noexcept;
  };
  IntMatrix product(const IntMatrix& a, const IntMatrix& b) const;

  RootSystem roots_;
  std::vector<WeylElement> elements_;
  std::unordered_map<IntMatrix, std::size_t, MatrixHash> index_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> inverse_;
  std::size_t longest_ = 0;
};

// Coxeter exponent m_ij from a_ij a_ji in {0,1,2,3}.
int coxeter_order(int aij, int aji);

}  // namespace flagcoh
