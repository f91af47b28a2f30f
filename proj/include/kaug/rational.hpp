#ifndef KAUG_RATIONAL_HPP
#define KAUG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace kaug {

using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize; always build rationals here.
Rational make_rational(long num, long den);

// Renders as "num/den", keeping the denominator even when it is 1.
std::string frac_str(const Rational& q);

// Accepts "num/den" or a bare integer. Throws Error on malformed input.
Rational parse_frac(const std::string& text);

}  // namespace kaug

#endif
