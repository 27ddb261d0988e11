#ifndef HKDEHN_RATIONAL_FUNCTION_HPP
#define HKDEHN_RATIONAL_FUNCTION_HPP

#include <stdexcept>
#include <utility>

#include "hkdehn/polynomial.hpp"

namespace hkdehn {

/// Quotient of two exact polynomials, kept in lowest terms with a monic
/// denominator. Two equal rational functions therefore compare equal
/// coefficient by coefficient.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(RationalPoly::constant(1)) {}
  RationalFunction(RationalPoly num) : num_(std::move(num)), den_(RationalPoly::constant(1)) {}  // NOLINT
  RationalFunction(RationalPoly num, RationalPoly den);

  const RationalPoly& numerator() const { return num_; }
  const RationalPoly& denominator() const { return den_; }

  /// Exact value at x; throws std::domain_error at a pole.
  Rational operator()(const Rational& x) const;

  /// Exact value at z with z^2 = u. Requires numerator and denominator to
  /// be even, which is how values such as t(sqrt(1/3)) are obtained exactly.
  Rational at_square(const Rational& u) const;

  RationalFunction operator-() const { return {-num_, den_}; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  RationalPoly num_;
  RationalPoly den_;
};

RationalFunction derivative(const RationalFunction& r);

}  // namespace hkdehn

#endif  // HKDEHN_RATIONAL_FUNCTION_HPP
