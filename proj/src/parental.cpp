#include "hkdehn/parental.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/core.h>

namespace hkdehn {

namespace {

constexpr std::array<std::string_view, 5> kTagNames = {"ExcludedByVolume", "ShortSlopeOnly", "TwoRegimes",
                                                       "NotParentCertified", "Inconclusive"};

bool positive_finite(double x) { return std::isfinite(x) && x > 0; }

DecisionConstants active_constants(const ScreenOptions& options) {
  return decision_constants(options.constantMode, options.computed ? *options.computed : default_constants());
}

// Contribution of one cusp to sum 1/L^2 under each of its options.
struct CuspOptions {
  std::vector<double> listed;  // area / length^2 per listed slope
  double unlistedSup;          // unlisted slopes contribute in (0, unlistedSup)
};

// Sum of 1/L^2 over a filling. When some cusp uses the unlisted class the
// sum is only known to lie in [lo, hi) with hi exclusive.
struct SumRange {
  double lo = 0.0;
  double hi = 0.0;
  bool exact = true;

  bool reaches(double threshold) const { return exact ? lo >= threshold : hi > threshold; }
  bool meets(double a, double b) const {
    if (exact) return a <= lo && lo <= b;
    return hi > a && lo <= b;
  }
};

struct Enumeration {
  std::vector<FillingCandidate> shortList;
  std::vector<FillingCandidate> windowList;
  std::vector<std::size_t> shortIncompleteCusps;
  std::vector<std::size_t> windowIncompleteCusps;
  bool overBudget = false;
  std::size_t combinations = 0;
};

void note_cusps(std::vector<std::size_t>& into, const std::vector<std::size_t>& option,
                const std::vector<CuspOptions>& cusps) {
  for (std::size_t c = 0; c < option.size(); ++c)
    if (option[c] == cusps[c].listed.size() + 1 && std::find(into.begin(), into.end(), c) == into.end())
      into.push_back(c);
}

// Walks every filling of a nonempty subset of cusps. Option index 0 leaves
// a cusp unfilled, 1..n picks a listed slope, n+1 stands for every slope
// the record does not list.
Enumeration enumerate_fillings(const ManifoldRecord& parent, double shortSum, std::optional<LhatWindow> window,
                               std::size_t budget) {
  std::vector<CuspOptions> cusps;
  double total = 1.0;
  for (const auto& cusp : parent.cusps) {
    CuspOptions o;
    for (const auto& s : cusp.slopes) o.listed.push_back(cusp.area / (s.geodesicLength * s.geodesicLength));
    o.unlistedSup = cusp.area / (cusp.slopeLengthCutoff * cusp.slopeLengthCutoff);
    total *= static_cast<double>(o.listed.size() + 2);
    cusps.push_back(std::move(o));
  }

  Enumeration out;
  out.combinations = total > 1 ? static_cast<std::size_t>(std::min(total - 1, 1e18)) : 0;
  if (total - 1 > static_cast<double>(budget)) {
    out.overBudget = true;
    return out;
  }

  const double windowLo = window && !window->empty ? 1.0 / window->hiSq : 0.0;
  const double windowHi = window && !window->empty ? 1.0 / window->loSq : -1.0;

  std::vector<std::size_t> option(cusps.size(), 0);
  for (;;) {
    std::size_t c = 0;
    for (; c < option.size(); ++c) {
      if (++option[c] <= cusps[c].listed.size() + 1) break;
      option[c] = 0;
    }
    if (c == option.size()) break;

    SumRange sum;
    for (std::size_t i = 0; i < option.size(); ++i) {
      if (option[i] == 0) continue;
      if (option[i] <= cusps[i].listed.size()) {
        const double v = cusps[i].listed[option[i] - 1];
        sum.lo += v;
        sum.hi += v;
      } else {
        sum.hi += cusps[i].unlistedSup;
        sum.exact = false;
      }
    }

    const bool isShort = sum.reaches(shortSum);
    const bool inWindow = windowHi >= windowLo && sum.meets(windowLo, windowHi);
    if (!isShort && !inWindow) continue;
    if (!sum.exact) {
      // A listed sub-filling that is already short is reported on its own.
      if (isShort && sum.lo < shortSum) note_cusps(out.shortIncompleteCusps, option, cusps);
      if (inWindow) note_cusps(out.windowIncompleteCusps, option, cusps);
      continue;
    }
    FillingCandidate cand;
    for (std::size_t i = 0; i < option.size(); ++i)
      if (option[i] != 0) cand.choices.push_back({i, parent.cusps[i].slopes[option[i] - 1].name});
    cand.normalizedLength = 1.0 / std::sqrt(sum.lo);
    if (isShort) out.shortList.push_back(cand);
    if (inWindow) out.windowList.push_back(std::move(cand));
  }
  return out;
}

}  // namespace

std::string_view name(VerdictTag tag) { return kTagNames[static_cast<std::size_t>(tag)]; }

VerdictTag parse_verdict_tag(std::string_view text) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i)
    if (kTagNames[i] == text) return static_cast<VerdictTag>(i);
  throw InputError(fmt::format("unknown verdict tag '{}'", text));
}

std::string FillingCandidate::describe() const {
  std::string out;
  for (const auto& c : choices) {
    if (!out.empty()) out += ", ";
    out += fmt::format("cusp {} along {}", c.cusp, c.slope);
  }
  return out;
}

void ManifoldRecord::validate() const {
  if (!positive_finite(volume)) throw InputError(fmt::format("{}: volume must be positive", name));
  if (!positive_finite(geodesicCutoff)) throw InputError(fmt::format("{}: geodesicCutoff must be positive", name));
  for (std::size_t i = 0; i < geodesics.size(); ++i) {
    if (!positive_finite(geodesics[i])) throw InputError(fmt::format("{}: geodesic {} must be positive", name, i));
    if (i > 0 && geodesics[i] < geodesics[i - 1])
      throw InputError(fmt::format("{}: geodesics must be sorted ascending (index {})", name, i));
    if (geodesics[i] > geodesicCutoff)
      throw InputError(fmt::format("{}: geodesic {} exceeds geodesicCutoff", name, i));
  }
  for (std::size_t c = 0; c < cusps.size(); ++c) {
    if (!positive_finite(cusps[c].area)) throw InputError(fmt::format("{}: cusp {} area must be positive", name, c));
    if (!positive_finite(cusps[c].slopeLengthCutoff))
      throw InputError(fmt::format("{}: cusp {} slopeLengthCutoff must be positive", name, c));
    for (std::size_t s = 0; s < cusps[c].slopes.size(); ++s)
      if (!positive_finite(cusps[c].slopes[s].geodesicLength))
        throw InputError(fmt::format("{}: cusp {} slope {} length must be positive", name, c, s));
  }
}

double slope_normalized_length(double length, double area) {
  if (!positive_finite(length) || !positive_finite(area))
    throw InputError("slope length and cusp area must be positive");
  return length / std::sqrt(area);
}

double combine_normalized_lengths(std::span<const double> perCusp) {
  if (perCusp.empty()) throw InputError("combine_normalized_lengths needs at least one cusp");
  if (perCusp.size() == 1) {
    if (!positive_finite(perCusp[0])) throw InputError("normalized lengths must be positive");
    return perCusp[0];  // exact, where 1/sqrt(1/x^2) may be off by an ulp
  }
  double sum = 0.0;
  for (double l : perCusp) {
    if (!positive_finite(l)) throw InputError("normalized lengths must be positive");
    sum += 1.0 / (l * l);
  }
  return 1.0 / std::sqrt(sum);
}

ParentalVerdict parental_obligations(double volParent, double volChild, const ScreenOptions& options) {
  if (!positive_finite(volParent) || !positive_finite(volChild))
    throw InputError("volumes must be positive");
  if (!(options.epsilon >= 0)) throw InputError("epsilon must be nonnegative");

  const DecisionConstants constants = active_constants(options);
  const double shortBound = constants.shortSlope + options.epsilon;

  ParentalVerdict v;
  v.deltaV = volParent - volChild;
  if (v.deltaV <= 0 && options.strictVolumeDecrease) {
    v.tag = VerdictTag::ExcludedByVolume;
    return v;
  }
  const std::string shortTask =
      fmt::format("enumerate slopes with normalized length <= {} and test each filling", shortBound);
  if (v.deltaV <= 0) {
    v.tag = VerdictTag::ShortSlopeOnly;
    v.obligations.push_back(shortTask);
    return v;
  }

  const VolumeDefect dv(v.deltaV);
  const LhatWindow window = lhat_sq_window(dv, options.boundMode, constants);
  if (window.empty) {
    v.tag = VerdictTag::ShortSlopeOnly;
    v.window = window;
    v.obligations.push_back(shortTask);
    return v;
  }
  v.tag = VerdictTag::TwoRegimes;
  v.window = window;
  v.geodesicCeiling = ell_upper(dv, options.boundMode, constants);
  v.obligations.push_back(shortTask);
  v.obligations.push_back(fmt::format("check the child for a closed geodesic shorter than {}", *v.geodesicCeiling));
  v.obligations.push_back(
      fmt::format("enumerate slopes with squared normalized length in [{}, {}] and test each filling", window.loSq,
                  window.hiSq));
  return v;
}

ParentalVerdict screen_pair(const ManifoldRecord& parent, const ManifoldRecord& child, const ScreenOptions& options) {
  parent.validate();
  child.validate();
  ParentalVerdict v = parental_obligations(parent.volume, child.volume, options);
  if (v.tag == VerdictTag::ExcludedByVolume) return v;
  v.obligations.clear();

  const DecisionConstants constants = active_constants(options);
  const double shortBound = constants.shortSlope + options.epsilon;
  const double shortSum = 1.0 / (shortBound * shortBound);

  // Geodesic disjunct: live when the child lists a geodesic under the
  // ceiling, ruled out when the list is complete up to the ceiling.
  bool geodesicLive = false;
  bool geodesicRuledOut = true;
  if (v.geodesicCeiling) {
    const double ceiling = *v.geodesicCeiling;
    geodesicLive = !child.geodesics.empty() && child.geodesics.front() < ceiling;
    geodesicRuledOut = !geodesicLive && child.geodesicCutoff >= ceiling;
    if (!geodesicLive && !geodesicRuledOut)
      v.warnings.push_back(fmt::format("child geodesic list is complete only to {} < ceiling {}",
                                       child.geodesicCutoff, ceiling));
  }
  const bool windowRelevant = v.window && !v.window->empty && !geodesicRuledOut;

  if (parent.cusps.empty()) {
    v.tag = VerdictTag::Inconclusive;
    v.warnings.push_back("parent record lists no cusps; slope data unavailable");
    v.obligations.push_back(
        fmt::format("enumerate slopes with normalized length <= {} and test each filling", shortBound));
    return v;
  }

  const Enumeration e = enumerate_fillings(parent, shortSum, windowRelevant ? v.window : std::nullopt,
                                           options.productBudget);
  if (e.overBudget) {
    v.tag = VerdictTag::Inconclusive;
    v.warnings.push_back(
        fmt::format("{} slope combinations exceed the product budget {}", e.combinations, options.productBudget));
    v.obligations.push_back("screen multi-cusp fillings with a larger product budget");
    return v;
  }
  v.shortCandidates = e.shortList;
  v.windowCandidates = e.windowList;

  for (std::size_t c : e.shortIncompleteCusps) {
    const double need = shortBound * std::sqrt(parent.cusps[c].area);
    v.warnings.push_back(fmt::format("cusp {} slope list is incomplete for the short-slope regime", c));
    v.obligations.push_back(fmt::format("extend the slope list of cusp {} to torus length >= {}", c, need));
  }
  for (std::size_t c : e.windowIncompleteCusps) {
    if (std::find(e.shortIncompleteCusps.begin(), e.shortIncompleteCusps.end(), c) != e.shortIncompleteCusps.end())
      continue;
    const double need = std::sqrt(v.window->hiSq * parent.cusps[c].area);
    v.warnings.push_back(fmt::format("cusp {} slope list is incomplete for the L-hat window", c));
    v.obligations.push_back(fmt::format("extend the slope list of cusp {} to torus length >= {}", c, need));
  }
  for (const auto& cand : e.shortList)
    v.obligations.push_back(fmt::format("fill {} (normalized length {}) and test isometry with {}", cand.describe(),
                                        cand.normalizedLength, child.name));
  for (const auto& cand : e.windowList)
    v.obligations.push_back(fmt::format("fill {} (squared normalized length {}) and test isometry with {}",
                                        cand.describe(), cand.normalizedLength * cand.normalizedLength,
                                        child.name));
  if (geodesicLive && e.windowList.empty() && e.windowIncompleteCusps.empty())
    v.obligations.push_back(fmt::format(
        "child has a closed geodesic of length {} below the ceiling {}; confirm no filling in the L-hat window",
        child.geodesics.front(), *v.geodesicCeiling));

  const bool certified = e.shortList.empty() && e.shortIncompleteCusps.empty() && e.windowList.empty() &&
                         e.windowIncompleteCusps.empty() && !geodesicLive;
  v.tag = certified ? VerdictTag::NotParentCertified : VerdictTag::Inconclusive;
  return v;
}

}  // namespace hkdehn
