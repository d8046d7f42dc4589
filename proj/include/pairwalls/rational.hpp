#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace pairwalls {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using i64 = std::int64_t;

/// Parses "a" or "a/b" (b > 0 after normalization). Throws std::invalid_argument.
Rat parse_rat(const std::string& s);

/// "a" when the denominator is 1, otherwise "a/b".
std::string rat_str(const Rat& q);

bool is_integer(const Rat& q);

/// Exact integer from a rational known to be integral. Throws otherwise.
Int to_integer(const Rat& q);

/// binom(n, k) for k >= 0; returns 0 for n < k (including all n < 0).
Int binomial(const Int& n, unsigned k);

i64 binomial_i64(i64 n, unsigned k);

}  // namespace pairwalls
