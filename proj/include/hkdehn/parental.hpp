#ifndef HKDEHN_PARENTAL_HPP
#define HKDEHN_PARENTAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hkdehn/bounds.hpp"

namespace hkdehn {

struct SlopeData {
  std::string name;       ///< free-form label, e.g. "p/q"
  double geodesicLength;  ///< length on the horospherical torus
};

struct CuspData {
  double area;
  std::vector<SlopeData> slopes;
  /// Completeness claim: every slope of torus length <= cutoff is listed.
  double slopeLengthCutoff;
};

struct ManifoldRecord {
  std::string name;
  double volume;
  std::vector<CuspData> cusps;
  std::vector<double> geodesics;  ///< ascending initial segment of the length spectrum
  double geodesicCutoff;          ///< completeness claim for `geodesics`

  /// Throws InputError naming the first violated invariant.
  void validate() const;
};

enum class VerdictTag { ExcludedByVolume, ShortSlopeOnly, TwoRegimes, NotParentCertified, Inconclusive };

std::string_view name(VerdictTag tag);
VerdictTag parse_verdict_tag(std::string_view text);

/// One filling of the parent: a slope on each filled cusp.
struct FillingCandidate {
  struct Choice {
    std::size_t cusp;
    std::string slope;
    friend bool operator==(const Choice&, const Choice&) = default;
  };
  std::vector<Choice> choices;
  double normalizedLength;

  std::string describe() const;
  friend bool operator==(const FillingCandidate&, const FillingCandidate&) = default;
};

struct ParentalVerdict {
  VerdictTag tag = VerdictTag::Inconclusive;
  double deltaV = 0.0;
  std::optional<double> geodesicCeiling;
  std::optional<LhatWindow> window;
  std::vector<std::string> obligations;
  std::vector<std::string> warnings;
  std::vector<FillingCandidate> shortCandidates;
  std::vector<FillingCandidate> windowCandidates;
};

inline constexpr double kDefaultEpsilon = 1e-6;
inline constexpr std::size_t kDefaultProductBudget = 100'000;

struct ScreenOptions {
  double epsilon = kDefaultEpsilon;
  BoundMode boundMode = BoundMode::Nice;
  ConstantMode constantMode = ConstantMode::Published;
  std::size_t productBudget = kDefaultProductBudget;
  bool strictVolumeDecrease = true;
  /// Computed bundle for ConstantMode::Computed; default_constants() when null.
  const HKConstants* computed = nullptr;
};

/// length / sqrt(area).
double slope_normalized_length(double length, double area);

/// (sum of L^-2)^(-1/2) over the filled cusps.
double combine_normalized_lengths(std::span<const double> perCusp);

/// Volume-only screen: regime classification with the residual checks a
/// caller still has to perform.
ParentalVerdict parental_obligations(double volParent, double volChild, const ScreenOptions& options = {});

/// Full screen of one (parent, child) pair against the records' slope and
/// geodesic data. Never assumes completeness beyond the records' cutoffs;
/// missing data downgrades the verdict to Inconclusive.
ParentalVerdict screen_pair(const ManifoldRecord& parent, const ManifoldRecord& child,
                            const ScreenOptions& options = {});

}  // namespace hkdehn

#endif  // HKDEHN_PARENTAL_HPP
