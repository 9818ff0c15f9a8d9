#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flagcoh/coinv.hpp"
#include "flagcoh/divdiff.hpp"
#include "flagcoh/rootsys.hpp"
#include "flagcoh/weyl.hpp"

namespace flagcoh {

enum class CheckStatus { Pass, Fail, Skip };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string expected;
  std::string computed;
  std::string certifies;  // the identity the check establishes
  std::string note;       // skip reason or first failure
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  // Skips do not fail the run but are always listed.
  bool pass() const;
};

struct VerifyOptions {
  std::optional<MultiplicityTable> multiplicities;
  std::optional<RationalVector> x0;  // perfectness scan point; regular if absent
  std::uint64_t seed = 1;
  std::size_t leibniz_pairs = 100;
  std::size_t composition_pair_budget = 4096;
};

// Runs the module checks in a fixed order:
// rootsys, weyl (2), divdiff (3), coinvariant series, harmonic complement,
// Hiller criterion, Morse/coinvariant agreement, perfectness gap,
// representation pairing.
VerificationReport verify_all(const WeylGroup& group, const VerifyOptions& options);

// Random sparse polynomial, used by the Leibniz check and property tests.
Polynomial random_polynomial(std::mt19937_64& rng, int nvars, int max_degree, int max_terms);

std::string series_to_string(const Series& s);

}  // namespace flagcoh
