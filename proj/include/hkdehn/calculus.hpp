#ifndef HKDEHN_CALCULUS_HPP
#define HKDEHN_CALCULUS_HPP

#include <string_view>

#include "hkdehn/hk_functions.hpp"
#include "hkdehn/quadrature.hpp"

namespace hkdehn {

/// Selects F/Phi/f (plain) or F~/Phi~/f~ (tilde).
enum class Variant { Plain, Tilde };

/// Phi(z) = integral of F from 1 to z (tilde: F~). Phi(1) = 0.
/// Plain accepts z in (sqrt(sqrt 5 - 2), 1]; tilde accepts [sqrt(1/3), 1].
double eval_Phi(double z, Variant variant, double tol = kDefaultTol);

/// f(z) = K (1 - z) exp(-Phi(z)); tilde uses Phi~.
double eval_f(double z, Variant variant, double k = kK, double tol = kDefaultTol);

enum class VolumeKind { LB, UB };

/// LB(z) = (K/4) * integral_z^1 t and UB(z) = (K/4) * integral_z^1 T.
/// Accepted on (sqrt(sqrt 5 - 2), 1].
double eval_volume_integral(double z, VolumeKind kind, double k = kK, double tol = kDefaultTol);

/// The four decreasing maps whose inverses drive the bounds. Inverting
/// LB gives BL, UB gives BU, f gives s.
enum class MapKind { LB, UB, F, Ftilde };

std::string_view name(MapKind kind);

struct MonotoneMap {
  MapKind kind;
  double domain_lo;  ///< sqrt(1/3), rounded up
  double domain_hi;  ///< 1
  bool decreasing;
};

MonotoneMap monotone_map(MapKind kind);

/// Evaluates a map at z with the reference K.
double eval_map(MapKind kind, double z, double tol = kDefaultTol);

/// map(sqrt(1/3)) plus the 1e-10 outward padding; computed once.
double range_top(MapKind kind);

inline constexpr double kInversionTol = 1e-9;
inline constexpr int kInversionMaxIter = 200;

/// Solves map(z) = target on (sqrt(1/3), 1) by bisection.
/// Throws RangeError when target is not in (0, range_top(kind)).
double invert_monotone(MapKind kind, double target, double tol = kInversionTol);

inline double BL(double dv) { return invert_monotone(MapKind::LB, dv); }
inline double BU(double dv) { return invert_monotone(MapKind::UB, dv); }
inline double s_inverse_f(double v) { return invert_monotone(MapKind::F, v); }

}  // namespace hkdehn

#endif  // HKDEHN_CALCULUS_HPP
