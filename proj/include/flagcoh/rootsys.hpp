#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flagcoh/linalg.hpp"
#include "flagcoh/rational.hpp"

namespace flagcoh {

enum class CartanFamily { A, B, C, D, E, F, G, Custom };

struct CartanType {
  CartanFamily family = CartanFamily::A;
  int rank = 1;

  // "A2", "G2", "E6", ...; "custom" for JSON-supplied data.
  std::string name() const;
  // Parses "A2" or ("B", 3). Validity of the pair is checked by RootSystem::build.
  static CartanType parse(std::string_view text);
  static CartanType parse(std::string_view family, int rank);

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

// A crystallographic root system with all coordinates in the simple-root
// basis gamma_1..gamma_l of a*. Long roots have squared length 2. Immutable
// after construction.
class RootSystem {
 public:
  // Reduced irreducible systems of the classical and exceptional types.
  static RootSystem build(CartanType type);

  // Explicit data: Gram matrix of the simple roots and the full list of
  // positive roots (may be non-reduced, e.g. BC). The simple roots must be
  // the unit vectors. Every invariant is checked; violations throw InputError
  // naming the failing field. Degrees are derived from root heights of the
  // indivisible roots unless given.
  static RootSystem from_data(RationalMatrix gram, std::vector<IntVector> positive_roots,
                              std::optional<std::vector<int>> degrees = std::nullopt);

  int rank() const { return rank_; }
  const CartanType& type() const { return type_; }
  const RationalMatrix& gram() const { return gram_; }

  // a_ij = 2<gamma_j, gamma_i>/<gamma_i, gamma_i>.
  const std::vector<IntVector>& cartan() const { return cartan_; }

  // All positive roots, sorted by (height, reverse-lex coordinates).
  const std::vector<IntVector>& positive_roots() const { return positive_; }
  // Positive roots alpha with alpha/2 not a root.
  const std::vector<IntVector>& indivisible_roots() const { return indivisible_; }
  bool is_indivisible(std::size_t root_index) const { return indivisible_flag_[root_index]; }

  // N: number of indivisible positive roots (= |positive roots| when reduced).
  std::size_t num_positive() const { return indivisible_.size(); }
  bool is_reduced() const { return indivisible_.size() == positive_.size(); }

  // Fundamental invariant degrees d_1..d_l.
  const std::vector<int>& degrees() const { return degrees_; }

  std::optional<std::size_t> find_positive(const IntVector& v) const;
  bool is_root(const IntVector& v) const;

  // Partition of the positive roots into W-orbits (up to sign).
  const std::vector<std::size_t>& root_orbit() const { return orbit_of_; }
  std::size_t num_orbits() const { return num_orbits_; }

  Rational inner(const RationalVector& x, const RationalVector& y) const;
  Rational inner(const IntVector& x, const IntVector& y) const;

  // s_alpha(x) = x - 2 <x,alpha>/<alpha,alpha> alpha. alpha must be a root.
  RationalVector reflect(const IntVector& alpha, const RationalVector& x) const;
  IntVector reflect(const IntVector& alpha, const IntVector& x) const;
  // s_i on an integer vector via the Cartan matrix (0-based i).
  IntVector simple_reflect(int i, const IntVector& x) const;

  static int height(const IntVector& root);

 private:
  RootSystem() = default;
  void finish(std::optional<std::vector<int>> degrees);

  CartanType type_;
  int rank_ = 0;
  RationalMatrix gram_;
  std::vector<IntVector> cartan_;
  std::vector<IntVector> positive_;
  std::vector<IntVector> indivisible_;
  std::vector<bool> indivisible_flag_;
  std::map<IntVector, std::size_t> index_;
  std::vector<std::size_t> orbit_of_;
  std::size_t num_orbits_ = 0;
  std::vector<int> degrees_;
};

// Textbook Cartan matrix (Bourbaki numbering), a_ij = <gamma_i^vee, gamma_j>.
std::vector<IntVector> standard_cartan_matrix(CartanType type);

// Number of positive roots for each type, from the classification.
std::size_t expected_positive_count(CartanType type);

// m_alpha for every positive root, constant on W-orbits.
class MultiplicityTable {
 public:
  static MultiplicityTable uniform(const RootSystem& rs, int m);
  // Each entry names one positive root of an orbit and its multiplicity.
  // Every orbit must be covered and entries within an orbit must agree.
  static MultiplicityTable from_orbits(const RootSystem& rs, std::span<const std::pair<IntVector, int>> entries);

  int of_root(std::size_t root_index) const { return per_root_[root_index]; }
  const std::vector<int>& per_root() const { return per_root_; }

  // Present when every root carries the same value.
  std::optional<int> uniform_value() const;
  int min_value() const;
  // Uniform m in {2, 4, 8}: the regime where cohomology is the coinvariant algebra.
  bool coinvariant_regime() const;

 private:
  std::vector<int> per_root_;
};

// Check summary used by the verification report and the tests.
struct RootSystemAudit {
  bool positive_coordinates = true;
  bool cartan_shape = true;
  bool reflection_closed = true;
  bool gram_positive_definite = true;
  bool degree_sum = true;  // sum d_j == N + l
  bool ok() const {
    return positive_coordinates && cartan_shape && reflection_closed && gram_positive_definite && degree_sum;
  }
};
RootSystemAudit audit(const RootSystem& rs);

}  // namespace flagcoh
