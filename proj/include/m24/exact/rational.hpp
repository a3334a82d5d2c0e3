#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace m24 {

using Integer = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline Rat inverse(const Rat& x) {
  if (sgn(x) == 0) throw std::domain_error("inverse of zero rational");
  Rat r = 1 / x;
  return r;
}

inline bool is_integral(const Rat& x) { return x.get_den() == 1; }

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rat parse_rat(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& x);
std::string to_string(const Integer& x);

/// Rational square root when x is a perfect square in Q.
std::optional<Rat> exact_sqrt(const Rat& x);

Integer ipow(const Integer& base, unsigned long exponent);
Rat rpow(const Rat& base, long exponent);

/// floor(log2 |x|) for nonzero x, used for size diagnostics.
long bit_height(const Rat& x);

}  // namespace m24
