#include "hkdehn/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "hkdehn/calculus.hpp"

namespace hkdehn {

const PublishedConstants& published_constants() {
  static const PublishedConstants table = [] {
    PublishedConstants p;
    p.tubeRadius = std::atanh(1.0 / std::sqrt(3.0));
    return p;
  }();
  return table;
}

RootEnclosure beta_bracket() { return {make_rational(577, 1000), Rational(1)}; }

RootEnclosure certify_beta(double width) {
  const RationalPoly num = ftilde_numerator();
  // 577/1000 < sqrt(1/3) < 5774/10000: one root on both brackets means the
  // root sits in (5774/10000, 1), inside (sqrt(1/3), 1), and is unique there.
  const RootEnclosure wide = beta_bracket();
  const int outer = sturm_count(num, wide.lo, wide.hi);
  const int inner = sturm_count(num, make_rational(5774, 10000), wide.hi);
  if (outer != 1 || inner != 1)
    throw std::runtime_error(fmt::format("F~ numerator has {} / {} roots on the beta brackets", outer, inner));
  return refine_root(num, wide, width);
}

HKConstants compute_constants(const ConstantOptions& options) {
  constexpr double pi = std::numbers::pi;
  HKConstants c;
  c.K = options.K;
  c.quadTol = options.quadTol;
  c.published = published_constants();
  c.beta = certify_beta(options.rootWidth);

  const double r = std::sqrt(1.0 / 3.0);
  c.phiAtSqrtThird = eval_Phi(r, Variant::Plain, options.quadTol);
  c.phiTildeAtBeta = std::min(eval_Phi(c.beta.lo_down(), Variant::Tilde, options.quadTol),
                              eval_Phi(c.beta.hi_up(), Variant::Tilde, options.quadTol));
  c.tAtSqrtThird = exact_forms().t.at_square(Rational(1, 3));
  const double t0 = to_double(c.tAtSqrtThird);

  c.A = c.K * std::exp(-c.phiAtSqrtThird);
  c.B = c.K * std::exp(-c.phiTildeAtBeta);
  c.C = c.K * t0 / 4.0;
  c.D = c.K / 4.0;
  c.alpha = 2.0 * std::exp(c.phiAtSqrtThird - c.phiTildeAtBeta) / (pi * t0);
  c.delta = (2 * pi) * (2 * pi) * std::exp(c.phiTildeAtBeta) * t0 / 4.0;
  c.gamma = (2 * pi) * (2 * pi) * std::exp(c.phiAtSqrtThird) / 4.0;

  const double f0 = eval_f(r, Variant::Plain, c.K, options.quadTol);
  c.shortSlope = 2 * pi / std::sqrt(f0);
  c.coreLenCap = 1.0 / (2 * pi * eval_h(r) / c.K);
  c.defectCap = eval_volume_integral(r, VolumeKind::UB, c.K, options.quadTol);
  c.lbAtSqrtThird = eval_volume_integral(r, VolumeKind::LB, c.K, options.quadTol);
  return c;
}

const HKConstants& default_constants() {
  static const HKConstants c = compute_constants();
  return c;
}

std::string_view name(ConstantMode mode) { return mode == ConstantMode::Published ? "published" : "computed"; }

ConstantMode parse_constant_mode(std::string_view text) {
  if (text == "published") return ConstantMode::Published;
  if (text == "computed") return ConstantMode::Computed;
  throw InputError(fmt::format("unknown constant mode '{}' (expected published|computed)", text));
}

DecisionConstants decision_constants(ConstantMode mode, const HKConstants& computed) {
  if (mode == ConstantMode::Published) {
    const auto& p = published_constants();
    return {mode, p.alphaPub, p.deltaPub, p.gammaPub, p.shortSlope, p.coreLenCap, p.defectCap};
  }
  return {mode,
          computed.alpha,
          computed.delta,
          computed.gamma,
          computed.shortSlope,
          computed.coreLenCap,
          computed.defectCap};
}

}  // namespace hkdehn
