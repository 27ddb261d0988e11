#include "hkdehn/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "hkdehn/calculus.hpp"

namespace hkdehn {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

void require_positive(VolumeDefect dv) {
  if (!(dv.dv > 0)) throw InputError(fmt::format("volume defect must be positive, got {}", dv.dv));
}

double core_length_at(double z) { return kK / (kTwoPi * eval_h(z)); }

}  // namespace

VolumeDefect::VolumeDefect(double v) : dv(v) {
  if (!std::isfinite(v)) throw InputError("volume defect must be finite");
}

std::string_view name(BoundMode mode) { return mode == BoundMode::Nice ? "nice" : "complicated"; }

BoundMode parse_bound_mode(std::string_view text) {
  if (text == "nice") return BoundMode::Nice;
  if (text == "complicated") return BoundMode::Complicated;
  throw InputError(fmt::format("unknown bound mode '{}' (expected nice|complicated)", text));
}

std::pair<double, double> volume_defect_bracket(TanhRadius ztilde, TanhRadius zhat) {
  if (!ztilde.standing() || !zhat.standing())
    throw DomainError("volume_defect_bracket needs both radii in (sqrt(1/3), 1)");
  return {eval_volume_integral(ztilde.value(), VolumeKind::LB),
          eval_volume_integral(zhat.value(), VolumeKind::UB)};
}

std::pair<double, double> core_length_bounds(TanhRadius ztilde, TanhRadius zhat) {
  if (!ztilde.standing() || !zhat.standing())
    throw DomainError("core_length_bounds needs both radii in (sqrt(1/3), 1)");
  return {core_length_at(ztilde.value()), core_length_at(zhat.value())};
}

double ell_upper(VolumeDefect dv, BoundMode mode, const DecisionConstants& constants) {
  require_positive(dv);
  if (mode == BoundMode::Nice) return std::min(constants.alpha * dv.dv, constants.coreLenCap);
  try {
    const double ztilde = BL(dv.dv);
    const double zhat = s_inverse_f(eval_f(ztilde, Variant::Tilde));
    return std::min(core_length_at(zhat), constants.coreLenCap);
  } catch (const RangeError&) {
    return constants.coreLenCap;
  }
}

LhatWindow lhat_sq_window(VolumeDefect dv, BoundMode mode, const DecisionConstants& constants) {
  require_positive(dv);
  constexpr double four_pi_sq = kTwoPi * kTwoPi;
  if (mode == BoundMode::Nice) {
    if (dv.dv >= constants.defectCap) return LhatWindow::none();
    return LhatWindow::make(constants.delta / dv.dv, constants.gamma / dv.dv);
  }

  double hi;
  try {
    hi = four_pi_sq / eval_f(BU(dv.dv), Variant::Plain);
  } catch (const RangeError&) {
    return LhatWindow::none();
  }
  double lo;
  try {
    lo = four_pi_sq / eval_f(BL(dv.dv), Variant::Tilde);
  } catch (const RangeError&) {
    lo = constants.shortSlope * constants.shortSlope;
  }
  return LhatWindow::make(lo, hi);
}

}  // namespace hkdehn
