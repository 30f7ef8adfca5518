#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scg {

/// Exact rational scalar. GMP keeps every result of +, -, *, / in lowest
/// terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Renders "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws Error on malformed input or a zero
/// denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned k);
Integer binomial(unsigned n, unsigned k);
/// 2^e for any signed exponent.
Rational pow2(int e);

}  // namespace scg
