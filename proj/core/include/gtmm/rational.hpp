#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gtmm {

/// Exact arbitrary-precision rational scalar. All matrix and group-algebra
/// arithmetic in this library is exact; there is no floating-point backend.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "n" or "p/q" (optionally signed) into a canonical rational.
Rational rational_from_string(const std::string& text);

/// Canonical decimal form: "n" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

inline Rational rational_from_int(std::int64_t value) {
  Rational r;
  r = static_cast<long>(value);
  return r;
}

}  // namespace gtmm
