// Exact rational scalars backed by GMP.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace surfres {

/// Arbitrary precision rational, always canonical (lowest terms, positive
/// denominator) after every operation.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Canonical text: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rat& q);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

/// Largest integer not exceeding q.
BigInt floor(const Rat& q);

/// p/q in lowest terms; the two-argument mpq_class constructor does not
/// canonicalize.
inline Rat frac(const BigInt& p, const BigInt& q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Rat pow(const Rat& base, unsigned e) {
  Rat result(1);
  for (unsigned i = 0; i < e; ++i) result *= base;
  return result;
}

}  // namespace surfres
