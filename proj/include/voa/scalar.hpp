#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace voa {

/// Exact rational number. gmp keeps every value reduced with a positive
/// denominator after each arithmetic operation.
using Scalar = mpq_class;
using Integer = mpz_class;

inline Scalar make_scalar(std::int64_t num, std::int64_t den = 1) {
  Scalar s{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  s.canonicalize();
  return s;
}

/// Parses "a", "-a" or "a/b".
Scalar parse_scalar(const std::string& text);

inline std::string to_string(const Scalar& s) { return s.get_str(); }

/// Generalized binomial coefficient C(top, k) = top (top-1) ... (top-k+1) / k!
/// for any integer top and k >= 0; zero for k < 0.
Integer binomial(std::int64_t top, std::int64_t k);

inline int sign_power(std::int64_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

Scalar factorial(unsigned n);

/// Exact integer value of s if s is an integer.
bool is_integer(const Scalar& s);
std::int64_t to_int64(const Scalar& s);

}  // namespace voa
