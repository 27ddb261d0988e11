#include "hkdehn/hk_functions.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <fmt/core.h>

namespace hkdehn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Signs of z^4 + 4z^2 - 1 and z^2 - 1/3 at a double, computed exactly.
int sign_hprime_numerator(double z) {
  const Rational u = Rational(z) * Rational(z);
  return sgn(u * u + 4 * u - 1);
}
int sign_square_minus_third(double z) { return sgn(Rational(z) * Rational(z) - Rational(1, 3)); }

template <class SignFn>
double tighten_up(double d, SignFn sign) {
  while (sign(d) <= 0) d = std::nextafter(d, kInf);
  while (sign(std::nextafter(d, -kInf)) > 0) d = std::nextafter(d, -kInf);
  return d;
}
template <class SignFn>
double tighten_down(double d, SignFn sign) {
  while (sign(d) >= 0) d = std::nextafter(d, -kInf);
  while (sign(std::nextafter(d, kInf)) < 0) d = std::nextafter(d, kInf);
  return d;
}

void require_closed_domain(double z, const char* what) {
  if (!(z > domain_lo_up() && z <= 1.0))
    throw DomainError(fmt::format("{}: z = {} outside (sqrt(sqrt(5)-2), 1]", what, z));
}

struct DoubleForm {
  Polynomial<double> num, den;
  double operator()(double z) const { return num(z) / den(z); }
};

const DoubleForm& ftilde_double() {
  static const DoubleForm form{to_double(exact_forms().Ftilde.numerator()),
                               to_double(exact_forms().Ftilde.denominator())};
  return form;
}

}  // namespace

double domain_lo_up() {
  static const double v = tighten_up(std::sqrt(std::sqrt(5.0) - 2.0), sign_hprime_numerator);
  return v;
}
double domain_lo_down() {
  static const double v = tighten_down(std::sqrt(std::sqrt(5.0) - 2.0), sign_hprime_numerator);
  return v;
}
double sqrt_third_up() {
  static const double v = tighten_up(std::sqrt(1.0 / 3.0), sign_square_minus_third);
  return v;
}
double sqrt_third_down() {
  static const double v = tighten_down(std::sqrt(1.0 / 3.0), sign_square_minus_third);
  return v;
}

TanhRadius TanhRadius::make(double z) {
  if (!(z > domain_lo_up() && z < 1.0))
    throw DomainError(fmt::format("tanh radius {} outside (sqrt(sqrt(5)-2), 1)", z));
  return TanhRadius(z);
}

double eval_h(double z) { return (1 + z * z) / (z * ((1 - z) * (1 + z))); }

double eval_hprime(double z) {
  const double z2 = z * z;
  const double w = (1 - z) * (1 + z);
  return (z2 * z2 + 4 * z2 - 1) / (z2 * w * w);
}

GeometryBundle eval_geometry(TanhRadius radius, double k) {
  const double z = radius.value();
  const double z2 = z * z;
  GeometryBundle b{};
  b.h = eval_h(z);
  b.g = (1 + z2) / (2 * z2 * z);
  b.gt = (1 + z2) * (1 + z2) / (2 * z2 * z * (3 - z2));
  b.hprime = eval_hprime(z);
  b.H = b.h / k;
  b.G = b.g / k;
  b.Gt = b.gt / k;
  return b;
}

double eval_F(double z) {
  require_closed_domain(z, "F");
  const double z2 = z * z;
  const double q = 1 + z2;
  return -(z2 * z2 + 6 * z2 + 4 * z + 1) / ((z + 1) * q * q);
}

double eval_Ftilde(double z) {
  require_closed_domain(z, "F~");
  return ftilde_double()(z);
}

double eval_t(double z) {
  require_closed_domain(z, "t");
  const double z2 = z * z;
  const double q = 1 + z2;
  return 2 * z2 * (z2 - 3) * (z2 * z2 + 4 * z2 - 1) / (q * q * (z2 - 2 * z - 1) * (z2 + 2 * z - 1));
}

double eval_T(double z) {
  require_closed_domain(z, "T");
  const double z2 = z * z;
  const double q = 1 + z2;
  return 2 * z2 * (z2 * z2 + 4 * z2 - 1) / (q * q * q);
}

Integrands eval_integrands(double z) { return {eval_t(z), eval_T(z)}; }

const ExactForms& exact_forms() {
  static const ExactForms forms = [] {
    const RationalFunction z(variable<Rational>());
    const RationalFunction one(RationalPoly::constant(1));
    const RationalFunction two(RationalPoly::constant(2));
    const RationalFunction three(RationalPoly::constant(3));
    const RationalFunction z2 = z * z;
    const RationalFunction z3 = z2 * z;

    ExactForms f;
    f.h = (one + z2) / (z * (one - z2));
    f.g = (one + z2) / (two * z3);
    f.gt = (one + z2) * (one + z2) / (two * z3 * (three - z2));
    f.hprime = derivative(f.h);
    const RationalFunction pole = one / (one - z);
    f.F = f.hprime / (f.h + f.g) - pole;
    f.Ftilde = f.hprime / (f.h - f.gt) - pole;
    f.t = f.hprime / (f.h * (f.h - f.gt));
    f.T = f.hprime / (f.h * (f.h + f.g));
    return f;
  }();
  return forms;
}

RationalPoly ftilde_numerator() {
  const RationalPoly& num = exact_forms().Ftilde.numerator();
  mpz_class scale = 1;
  for (const auto& c : num.coeffs()) {
    mpz_class d = c.get_den();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
  }
  return num * Rational(scale);
}

}  // namespace hkdehn
