#ifndef HKDEHN_COMMANDS_HPP
#define HKDEHN_COMMANDS_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hkdehn/parental.hpp"
#include "hkdehn/verification.hpp"

namespace hkdehn {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitBadInput = 2;

/// Default quadrature tolerance, overridable through HKDEHN_TOL.
double default_tolerance();

struct ConstantsFlags {
  double tol = kDefaultTol;
  ConstantMode mode = ConstantMode::Published;
};

struct BoundsFlags {
  double deltaV = 0.0;
  ConstantMode mode = ConstantMode::Published;
  BoundMode boundMode = BoundMode::Nice;  ///< mode used for the regime line
};

struct TestFlags {
  std::filesystem::path parent;
  std::vector<std::filesystem::path> children;
  double epsilon = kDefaultEpsilon;
  double tol = kDefaultTol;
  ConstantMode mode = ConstantMode::Published;
  BoundMode boundMode = BoundMode::Nice;
  std::optional<std::filesystem::path> out;  ///< stdout when unset
};

struct VerifyFlags {
  long gridN = kDefaultGridN;
  double K = kK;  ///< debug override; anything but kK is a negative control
};

int cmd_constants(const ConstantsFlags& flags, std::ostream& out, std::ostream& err);
int cmd_bounds(const BoundsFlags& flags, std::ostream& out, std::ostream& err);
/// One child writes a single ReportFile; several children write an array
/// of them, in command-line order.
int cmd_test(const TestFlags& flags, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err);

}  // namespace hkdehn

#endif  // HKDEHN_COMMANDS_HPP
