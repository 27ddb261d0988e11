#ifndef HKDEHN_HK_FUNCTIONS_HPP
#define HKDEHN_HK_FUNCTIONS_HPP

#include "hkdehn/errors.hpp"
#include "hkdehn/rational_function.hpp"

namespace hkdehn {

/// Scale constant relating the h/g family to H/G.
inline constexpr double kK = 3.3957;

/// Double bounds bracketing sqrt(sqrt(5) - 2), the positive root of
/// z^4 + 4z^2 - 1, certified by exact sign evaluation.
double domain_lo_down();
double domain_lo_up();
/// Double bounds bracketing sqrt(1/3).
double sqrt_third_down();
double sqrt_third_up();

/// tanh of a tube radius, z in (sqrt(sqrt 5 - 2), 1).
class TanhRadius {
 public:
  /// Throws DomainError outside the open interval.
  static TanhRadius make(double z);

  double value() const { return z_; }
  /// True once z > sqrt(1/3), i.e. radius above artanh(1/sqrt 3).
  bool standing() const { return z_ > sqrt_third_up(); }

 private:
  explicit TanhRadius(double z) : z_(z) {}
  double z_;
};

struct GeometryBundle {
  double h, g, gt, hprime;
  double H, G, Gt;
};

/// h, g, g~, h' and their K-scaled copies at z.
GeometryBundle eval_geometry(TanhRadius z, double k = kK);

double eval_h(double z);
double eval_hprime(double z);

/// F = h'/(h+g) - 1/(1-z) and F~ = h'/(h-g~) - 1/(1-z), evaluated from
/// their reduced forms. Accepted on (sqrt(sqrt 5 - 2), 1]; both extend
/// continuously to z = 1.
double eval_F(double z);
double eval_Ftilde(double z);

/// t = h'/(h(h-g~)) and T = h'/(h(h+g)).
struct Integrands {
  double t;
  double T;
};
Integrands eval_integrands(double z);
double eval_t(double z);
double eval_T(double z);

/// Exactly derived rational functions of z. Built once by rational-function
/// arithmetic from the definitions of h, g and g~.
struct ExactForms {
  RationalFunction h, g, gt, hprime;
  RationalFunction F, Ftilde;
  RationalFunction t, T;
};
const ExactForms& exact_forms();

/// Numerator of F~ in lowest terms, with integer coefficients. Its sign on
/// (sqrt(1/3), 1) is that of F~ times the sign of the reduced denominator.
RationalPoly ftilde_numerator();

}  // namespace hkdehn

#endif  // HKDEHN_HK_FUNCTIONS_HPP
