#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jb {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a" or "a/b"; the result is canonical.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Rational factorial(unsigned n);

Rational binomial(unsigned n, unsigned k);

}  // namespace jb
