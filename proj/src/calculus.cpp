#include "hkdehn/calculus.hpp"

#include <array>
#include <cmath>

#include <fmt/core.h>

namespace hkdehn {

namespace {

constexpr double kRangePadding = 1e-10;

void require_phi_domain(double z, Variant variant) {
  const double lo = variant == Variant::Plain ? domain_lo_up() : sqrt_third_down();
  const bool ok = variant == Variant::Plain ? (z > lo && z <= 1.0) : (z >= lo && z <= 1.0);
  if (!ok) throw DomainError(fmt::format("Phi{}: z = {} outside its domain", variant == Variant::Tilde ? "~" : "", z));
}

}  // namespace

double eval_Phi(double z, Variant variant, double tol) {
  require_phi_domain(z, variant);
  if (z == 1.0) return 0.0;
  const auto integrand = variant == Variant::Plain ? &eval_F : &eval_Ftilde;
  return -integrate(integrand, z, 1.0, tol).value;
}

double eval_f(double z, Variant variant, double k, double tol) {
  return k * (1.0 - z) * std::exp(-eval_Phi(z, variant, tol));
}

double eval_volume_integral(double z, VolumeKind kind, double k, double tol) {
  if (!(z > domain_lo_up() && z <= 1.0))
    throw DomainError(fmt::format("{}: z = {} outside (sqrt(sqrt(5)-2), 1]", kind == VolumeKind::LB ? "LB" : "UB", z));
  if (z == 1.0) return 0.0;
  const auto integrand = kind == VolumeKind::LB ? &eval_t : &eval_T;
  // Scale the tolerance so the final value meets `tol`.
  return k / 4.0 * integrate(integrand, z, 1.0, tol * 4.0 / k).value;
}

std::string_view name(MapKind kind) {
  switch (kind) {
    case MapKind::LB: return "LB";
    case MapKind::UB: return "UB";
    case MapKind::F: return "f";
    case MapKind::Ftilde: return "f~";
  }
  return "?";
}

MonotoneMap monotone_map(MapKind kind) { return {kind, sqrt_third_up(), 1.0, true}; }

double eval_map(MapKind kind, double z, double tol) {
  switch (kind) {
    case MapKind::LB: return eval_volume_integral(z, VolumeKind::LB, kK, tol);
    case MapKind::UB: return eval_volume_integral(z, VolumeKind::UB, kK, tol);
    case MapKind::F: return eval_f(z, Variant::Plain, kK, tol);
    case MapKind::Ftilde: return eval_f(z, Variant::Tilde, kK, tol);
  }
  throw std::logic_error("unknown map kind");
}

double range_top(MapKind kind) {
  static const std::array<double, 4> tops = [] {
    std::array<double, 4> v{};
    for (MapKind k : {MapKind::LB, MapKind::UB, MapKind::F, MapKind::Ftilde})
      v[static_cast<std::size_t>(k)] = eval_map(k, sqrt_third_up()) + kRangePadding;
    return v;
  }();
  return tops[static_cast<std::size_t>(kind)];
}

double invert_monotone(MapKind kind, double target, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("invert_monotone requires a positive tolerance");
  const double top = range_top(kind);
  if (!(target > 0.0 && target < top))
    throw RangeError(fmt::format("{} target {} outside the range (0, {})", name(kind), target, top));

  const MonotoneMap map = monotone_map(kind);
  double lo = map.domain_lo;
  double hi = map.domain_hi;
  for (int it = 0; it < kInversionMaxIter; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    if (eval_map(kind, mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  const double z = lo + 0.5 * (hi - lo);
  const double residual = std::abs(eval_map(kind, z) - target);
  if (residual > tol * (1.0 + std::abs(target)))
    throw RangeError(fmt::format("{} inversion of {} stalled with residual {}", name(kind), target, residual));
  return z;
}

}  // namespace hkdehn
