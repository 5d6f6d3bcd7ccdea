#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace syzstab {

/// Exact rational number (GMP). Note mpq_class(n, d) is not reduced; build
/// fractions as Rat(n) / d.
using Rat = mpq_class;
using BigInt = mpz_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "n" or "n/d" (optional sign, no whitespace). Throws ParseError.
Rat parse_rat(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rat& x);

/// Always "n/d", including integers ("4/1").
std::string to_fraction_string(const Rat& x);

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

/// Converts an integral rational to int64; throws std::overflow_error otherwise.
std::int64_t to_int64(const Rat& x);

/// Generalized binomial coefficient: 0 for k < 0, falling factorial / k! otherwise
/// (so n may be negative).
BigInt binom(long n, long k);

}  // namespace syzstab
