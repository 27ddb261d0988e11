#include "hkdehn/polynomial.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hkdehn/rational.hpp"
#include "hkdehn/rational_function.hpp"

namespace hkdehn {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite double has no rational value");
  return Rational(x);
}

double round_down(const Rational& x) {
  double d = x.get_d();
  if (Rational(d) > x) d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  return d;
}

double round_up(const Rational& x) {
  double d = x.get_d();
  if (Rational(d) < x) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

double to_double(const Rational& x) {
  const double lo = round_down(x);
  const double hi = round_up(x);
  if (lo == hi) return lo;
  return (x - Rational(lo)) <= (Rational(hi) - x) ? lo : hi;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Polynomial<double> to_double(const RationalPoly& p) {
  std::vector<double> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(to_double(c));
  return Polynomial<double>(std::move(v));
}

std::string to_string(const RationalPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

// --- RationalFunction -----------------------------------------------------

RationalFunction::RationalFunction(RationalPoly num, RationalPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = {};
    den_ = RationalPoly::constant(1);
    return;
  }
  const RationalPoly common = gcd(num, den);
  num = divmod(num, common).first;
  den = divmod(den, common).first;
  const Rational lead = den.leading();
  const Rational inv = 1 / lead;
  num_ = num * inv;
  den_ = den * inv;
}

Rational RationalFunction::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_(x) / d;
}

Rational RationalFunction::at_square(const Rational& u) const {
  const Rational d = in_square(den_)(u);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole");
  return in_square(num_)(u) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num_.is_zero()) throw std::domain_error("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction derivative(const RationalFunction& r) {
  const auto& n = r.numerator();
  const auto& d = r.denominator();
  return {derivative(n) * d - n * derivative(d), d * d};
}

}  // namespace hkdehn
