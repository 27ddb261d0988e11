#ifndef HKDEHN_CONSTANTS_HPP
#define HKDEHN_CONSTANTS_HPP

#include <string_view>

#include "hkdehn/hk_functions.hpp"
#include "hkdehn/quadrature.hpp"
#include "hkdehn/sturm.hpp"

namespace hkdehn {

/// Published reference values. Fixed; never recomputed.
struct PublishedConstants {
  double K = 3.3957;
  double shortSlope = 7.5832;   ///< normalized-length threshold
  double coreLenCap = 0.156012; ///< core geodesic length cap
  double defectCap = 0.198;     ///< volume-defect cap in the long-slope regime
  double tubeRadius = 0.0;      ///< artanh(1/sqrt 3), filled in by published_constants()
  double alphaPub = 2.879;
  double deltaPub = 4.563;
  double gammaPub = 20.633;
};

const PublishedConstants& published_constants();

/// Derived bundle. Values depend on the quadrature tolerance; alpha,
/// delta and gamma do not depend on K.
struct HKConstants {
  RootEnclosure beta;      ///< unique zero of F~ in (sqrt(1/3), 1)
  double K = kK;
  double phiAtSqrtThird;   ///< Phi(sqrt(1/3))
  double phiTildeAtBeta;   ///< min of Phi~ over the beta enclosure endpoints
  Rational tAtSqrtThird;   ///< exact
  double A, B, C, D;
  double alpha, delta, gamma;
  // Thresholds recomputed from the function definitions.
  double shortSlope;       ///< 2 pi / sqrt(f(sqrt(1/3)))
  double coreLenCap;       ///< 1 / (2 pi H(sqrt(1/3)))
  double defectCap;        ///< UB(sqrt(1/3))
  double lbAtSqrtThird;    ///< LB(sqrt(1/3))
  double quadTol;
  PublishedConstants published;
};

struct ConstantOptions {
  double quadTol = kDefaultTol;
  double rootWidth = 1e-12;
  double K = kK;  ///< only the K-dependent fields (A..D, thresholds) move
};

/// Computes the derived bundle. Throws on quadrature failure or if the
/// Sturm certificate for beta does not come out as exactly one root.
HKConstants compute_constants(const ConstantOptions& options = {});

/// Cached compute_constants() with default options.
const HKConstants& default_constants();

/// Rational bracket of (sqrt(1/3), 1) used for beta, and the certified
/// enclosure of beta itself.
RootEnclosure beta_bracket();
RootEnclosure certify_beta(double width);

enum class ConstantMode { Published, Computed };

std::string_view name(ConstantMode mode);
ConstantMode parse_constant_mode(std::string_view text);

/// The constants that decision logic consumes.
struct DecisionConstants {
  ConstantMode mode;
  double alpha, delta, gamma;
  double shortSlope, coreLenCap, defectCap;
};

DecisionConstants decision_constants(ConstantMode mode, const HKConstants& computed = default_constants());

}  // namespace hkdehn

#endif  // HKDEHN_CONSTANTS_HPP
