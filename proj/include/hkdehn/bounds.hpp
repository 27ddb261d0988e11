#ifndef HKDEHN_BOUNDS_HPP
#define HKDEHN_BOUNDS_HPP

#include <string_view>
#include <utility>

#include "hkdehn/constants.hpp"

namespace hkdehn {

/// vol(parent) - vol(child). Any finite value; decision logic reads the sign.
struct VolumeDefect {
  double dv;
  explicit VolumeDefect(double v);
};

/// Window on the squared normalized length. An empty window means the
/// long-slope regime is impossible for the given defect.
struct LhatWindow {
  double loSq = 0.0;
  double hiSq = 0.0;
  bool empty = true;

  static LhatWindow make(double lo, double hi) { return {lo, hi, !(lo <= hi)}; }
  static LhatWindow none() { return {}; }
  bool contains(double lhatSq) const { return !empty && loSq <= lhatSq && lhatSq <= hiSq; }
};

/// Complicated: exact compositions through BL, BU and s. Nice: the linear
/// relaxations alpha*dv, delta/dv, gamma/dv.
enum class BoundMode { Complicated, Nice };

std::string_view name(BoundMode mode);
BoundMode parse_bound_mode(std::string_view text);

/// (LB(ztilde), UB(zhat)): the bracket [lo, hi] containing the volume defect.
std::pair<double, double> volume_defect_bracket(TanhRadius ztilde, TanhRadius zhat);

/// (1/(2 pi H(ztilde)), 1/(2 pi H(zhat))): the bracket on the core length.
std::pair<double, double> core_length_bounds(TanhRadius ztilde, TanhRadius zhat);

/// Upper bound on the core geodesic length, always capped at coreLenCap.
double ell_upper(VolumeDefect dv, BoundMode mode, const DecisionConstants& constants);

/// Window on L-hat^2 in the long-slope regime.
LhatWindow lhat_sq_window(VolumeDefect dv, BoundMode mode, const DecisionConstants& constants);

}  // namespace hkdehn

#endif  // HKDEHN_BOUNDS_HPP
