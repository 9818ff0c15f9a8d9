#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flagcoh/coinv.hpp"
#include "flagcoh/rootsys.hpp"
#include "flagcoh/weyl.hpp"

namespace flagcoh {

// A critical point w.x0 of the height function.
struct OrbitPoint {
  RationalVector simple_values;  // gamma_i(p)
  RationalVector root_values;    // alpha(p) for every positive root, in root order
  std::size_t representative = 0;  // minimal-length w with p = w.x0
  int index = 0;                 // Morse index d(p)
};

// Distinct points of W.x0 for x0 in the closed positive chamber, in group
// order of their minimal representatives.
std::vector<OrbitPoint> orbit_points(const WeylGroup& group, const RationalVector& x0);

// d(p) = sum of m_alpha over indivisible positive alpha with alpha(p) < 0.
// A zero value alpha(p) = 0 is not a crossing.
int morse_index(const RootSystem& rs, const MultiplicityTable& mult, const OrbitPoint& p);

enum class OrbitCounting {
  DistinctPoints,  // one class per critical point
  WithRepetition,  // one class per w in W (each point |W_x0| times)
};

struct MorseProfile {
  RationalVector x0;
  std::vector<OrbitPoint> orbit;  // sorted by (index, simple_values)
  std::size_t stabilizer_order = 1;
  Series betti;                   // b_k; also the coefficients of sum_p t^{d(p)}
  std::int64_t total() const;
  std::int64_t euler_characteristic() const;
};

MorseProfile betti_numbers(const WeylGroup& group, const MultiplicityTable& mult, const RationalVector& x0,
                           OrbitCounting counting = OrbitCounting::DistinctPoints);

// Q(t) -> Q(t^m)
Series stretch(const Series& q, int m);

struct AgreementReport {
  RationalVector x0;
  int m = 0;
  Series morse_series;        // sum_p t^{d(p)}
  Series quotient_series;     // Q: invariants of the stabilizer in S/I_W
  Series stretched_quotient;  // Q(t^m)
  std::size_t orbit_size = 0;
  std::size_t expected_total = 0;  // |W| / |W_x0|
  std::int64_t euler_characteristic = 0;
  bool series_match = false;
  bool euler_match = false;
  bool pass() const { return series_match && euler_match; }
};

// Betti census of the orbit against the stabilizer-invariant part of the
// coinvariant algebra, with degrees multiplied by m. Requires uniform
// multiplicity m in {2, 4, 8}; otherwise InputError.
AgreementReport verify_coinvariant_agreement(const CoinvariantAlgebra& coinv, const MultiplicityTable& mult,
                                             const RationalVector& x0);

struct PerfectnessReport {
  struct Violation {
    std::size_t p = 0, q = 0;  // positions in the orbit list
    IntVector root;            // p = s_root q
    int index_p = 0, index_q = 0;
  };
  bool hypothesis_holds = true;  // every multiplicity >= 2
  std::size_t pairs_checked = 0;
  std::vector<Violation> violations;
  // Adjacent indices are only an error when the hypothesis holds.
  bool pass() const { return !hypothesis_holds || violations.empty(); }
};

// Scan pairs of orbit points related by a reflection for indices differing by one.
PerfectnessReport perfectness_witness(const WeylGroup& group, const MultiplicityTable& mult, const RationalVector& x0);

}  // namespace flagcoh
