// hkdehn: constants, bound queries, pair screening and verification.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "hkdehn/commands.hpp"
#include "hkdehn/errors.hpp"
#include "hkdehn/records.hpp"

namespace {

const std::map<std::string, hkdehn::ConstantMode> kConstantModes = {{"published", hkdehn::ConstantMode::Published},
                                                                    {"computed", hkdehn::ConstantMode::Computed}};
const std::map<std::string, hkdehn::BoundMode> kBoundModes = {{"nice", hkdehn::BoundMode::Nice},
                                                              {"complicated", hkdehn::BoundMode::Complicated}};

}  // namespace

int main(int argc, char** argv) {
  using namespace hkdehn;

  double tol = kDefaultTol;
  try {
    tol = default_tolerance();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  CLI::App app{"Dehn filling volume and length bounds"};
  app.set_version_flag("--version", std::string("hkdehn ") + kToolVersion);
  app.require_subcommand(1);

  ConstantsFlags constantsFlags;
  constantsFlags.tol = tol;
  auto* constants = app.add_subcommand("constants", "Print derived and published constants");
  constants->add_option("--tol", constantsFlags.tol, "Quadrature tolerance (env HKDEHN_TOL sets the default)")
      ->capture_default_str();
  constants->add_option("--mode", constantsFlags.mode, "Decision-constant source")
      ->transform(CLI::CheckedTransformer(kConstantModes, CLI::ignore_case));

  BoundsFlags boundsFlags;
  auto* bounds = app.add_subcommand("bounds", "Geodesic ceiling, length window and regime for a volume defect");
  bounds->add_option("--delta-v", boundsFlags.deltaV, "Volume defect vol(parent) - vol(child)")->required();
  bounds->add_option("--mode", boundsFlags.mode, "Decision-constant source")
      ->transform(CLI::CheckedTransformer(kConstantModes, CLI::ignore_case));
  bounds->add_option("--bound-mode", boundsFlags.boundMode, "Bound family used for the regime line")
      ->transform(CLI::CheckedTransformer(kBoundModes, CLI::ignore_case));

  TestFlags testFlags;
  testFlags.tol = tol;
  std::string outPath;
  auto* test = app.add_subcommand("test", "Screen whether each child can be a filling of the parent");
  test->add_option("--parent", testFlags.parent, "Parent ManifoldFile")->required();
  test->add_option("--child", testFlags.children, "Child ManifoldFile (repeatable)")->required();
  test->add_option("--epsilon", testFlags.epsilon, "Slack added to the short-slope threshold")->capture_default_str();
  test->add_option("--tol", testFlags.tol, "Quadrature tolerance for computed constants")->capture_default_str();
  test->add_option("--mode", testFlags.mode, "Decision-constant source")
      ->transform(CLI::CheckedTransformer(kConstantModes, CLI::ignore_case));
  test->add_option("--bound-mode", testFlags.boundMode, "Bound family")
      ->transform(CLI::CheckedTransformer(kBoundModes, CLI::ignore_case));
  test->add_option("--out", outPath, "ReportFile path (stdout when omitted)");

  VerifyFlags verifyFlags;
  auto* verify = app.add_subcommand("verify", "Run the executable verification suite");
  verify->add_option("--grid-n", verifyFlags.gridN, "Grid points per sampled check")->capture_default_str();
  verify->add_option("--debug-k", verifyFlags.K, "Override K (negative control only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  if (*constants) return cmd_constants(constantsFlags, std::cout, std::cerr);
  if (*bounds) return cmd_bounds(boundsFlags, std::cout, std::cerr);
  if (*test) {
    if (!outPath.empty()) testFlags.out = outPath;
    return cmd_test(testFlags, std::cout, std::cerr);
  }
  return cmd_verify(verifyFlags, std::cout, std::cerr);
}
