#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dunkl {

/// Exact rational number, always kept canonical (lowest terms, positive
/// denominator). Backed by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Floating literals are rejected.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text form; "/1" is omitted.
std::string to_string(const Rational& q);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

/// Generalized binomial coefficient binom(a, m) for rational a.
Rational binomial(const Rational& a, unsigned m);

/// Rising factorial (a)_m = a (a+1) ... (a+m-1).
Rational pochhammer(const Rational& a, unsigned m);

Rational pow(const Rational& base, int exponent);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace dunkl
