#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace flagcoh {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<int>;

// Canonical text: "p" for integers, otherwise "p/q" with q > 0 and gcd(p,q) = 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws InputError on anything else or q = 0.
Rational parse_rational(std::string_view text);

// Comma separated list of rationals, e.g. "1,0,1/2".
RationalVector parse_rational_list(std::string_view text);

// Comma separated list of integers, e.g. "1,2,1".
IntVector parse_int_list(std::string_view text);

RationalVector to_rational(const IntVector& v);

}  // namespace flagcoh
