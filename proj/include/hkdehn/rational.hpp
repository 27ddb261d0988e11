#ifndef HKDEHN_RATIONAL_HPP
#define HKDEHN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace hkdehn {

/// Arbitrary-precision rational number. Always kept in canonical form.
using Rational = mpq_class;

/// Builds num/den and canonicalizes.
Rational make_rational(long num, long den = 1);

/// Exact binary value of a double.
Rational to_rational(double x);

/// Largest double not above x.
double round_down(const Rational& x);
/// Smallest double not below x.
double round_up(const Rational& x);
/// Nearest double (ties resolved by GMP truncation, then corrected).
double to_double(const Rational& x);

std::string to_string(const Rational& x);

inline int sign(const Rational& x) { return sgn(x); }

}  // namespace hkdehn

#endif  // HKDEHN_RATIONAL_HPP
