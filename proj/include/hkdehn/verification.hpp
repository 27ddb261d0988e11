#ifndef HKDEHN_VERIFICATION_HPP
#define HKDEHN_VERIFICATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hkdehn/constants.hpp"

namespace hkdehn {

/// Outcome of one executable check. `worstViolation` is signed slack:
/// <= 0 means the claim held everywhere it was tested.
struct CheckReport {
  std::string checkName;
  bool passed = false;
  double worstViolation = 0.0;
  long gridSize = 0;  ///< points tested; 0 for exact checks
  std::string detail;
};

enum class MonotoneKind { LB, UB, H, F, Ftilde };

std::string_view name(MonotoneKind kind);

inline constexpr double kGridInset = 1e-6;
inline constexpr double kMonotoneSlack = 1e-12;
inline constexpr long kDefaultGridN = 10'000;

/// Every adjacent difference on a gridN-point grid has the claimed sign
/// by at least kMonotoneSlack. LB, UB, H, f are tested on
/// (sqrt(sqrt 5 - 2), 1), f~ on (sqrt(1/3), 1); both inset by 1e-6.
CheckReport check_monotonicity(MonotoneKind kind, long gridN);

/// The five linear envelopes 1/h <= 1-z, f >= A(1-z), f~ <= B(1-z),
/// LB >= C(1-z), UB <= D(1-z) on (sqrt(1/3)+1e-6, 1-1e-6).
std::vector<CheckReport> check_envelopes(long gridN, const HKConstants& constants = default_constants());

/// Polynomial sign facts behind the envelopes, all by exact arithmetic.
std::vector<CheckReport> check_sign_facts();

/// One-sided constant bounds and threshold reproduction. `K` rescales
/// the K-dependent thresholds, which is how a negative control is run.
std::vector<CheckReport> check_constant_consistency(const HKConstants& constants, double K = kK);

/// Full default suite.
std::vector<CheckReport> run_verification_suite(long gridN = kDefaultGridN, double K = kK);

}  // namespace hkdehn

#endif  // HKDEHN_VERIFICATION_HPP
