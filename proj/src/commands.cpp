#include "hkdehn/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "hkdehn/errors.hpp"
#include "hkdehn/records.hpp"

namespace hkdehn {

namespace {

const HKConstants& constants_for(double tol, std::optional<HKConstants>& storage) {
  if (tol == kDefaultTol) return default_constants();
  ConstantOptions options;
  options.quadTol = tol;
  storage = compute_constants(options);
  return *storage;
}

void print_window(std::ostream& out, std::string_view label, const LhatWindow& w) {
  if (w.empty)
    fmt::print(out, "  {:<12} L^2 window: empty\n", label);
  else
    fmt::print(out, "  {:<12} L^2 window: [{:.10g}, {:.10g}]\n", label, w.loSq, w.hiSq);
}

}  // namespace

double default_tolerance() {
  const char* env = std::getenv("HKDEHN_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (*end != '\0' || !(tol > 0)) throw InputError(fmt::format("HKDEHN_TOL='{}' is not a positive number", env));
  return tol;
}

int cmd_constants(const ConstantsFlags& flags, std::ostream& out, std::ostream& err) {
  try {
    if (!(flags.tol > 0)) throw InputError("--tol must be positive");
    std::optional<HKConstants> storage;
    const HKConstants& c = constants_for(flags.tol, storage);
    const PublishedConstants& p = c.published;

    fmt::print(out, "quadrature tolerance = {:g}\n", c.quadTol);
    fmt::print(out, "beta in [{:.17g}, {:.17g}] (width {:.3g})\n", c.beta.lo_down(), c.beta.hi_up(),
               c.beta.hi_up() - c.beta.lo_down());
    fmt::print(out, "Phi(sqrt(1/3)) = {:.15g}\n", c.phiAtSqrtThird);
    fmt::print(out, "Phi~(beta) = {:.15g}\n", c.phiTildeAtBeta);
    fmt::print(out, "t(sqrt(1/3)) = {}\n", to_string(c.tAtSqrtThird));
    fmt::print(out, "A = {:.10g}\nB = {:.10g}\nC = {:.10g}\nD = {:.10g}\n", c.A, c.B, c.C, c.D);
    fmt::print(out, "alpha = {:.10g} (published <= {})\n", c.alpha, p.alphaPub);
    fmt::print(out, "delta = {:.10g} (published >= {})\n", c.delta, p.deltaPub);
    fmt::print(out, "gamma = {:.10g} (published <= {})\n", c.gamma, p.gammaPub);
    fmt::print(out, "short slope threshold = {:.10g} (published {})\n", c.shortSlope, p.shortSlope);
    fmt::print(out, "core length cap = {:.10g} (published {})\n", c.coreLenCap, p.coreLenCap);
    fmt::print(out, "volume defect cap = {:.10g} (published {})\n", c.defectCap, p.defectCap);

    fmt::print(out, "\npublished table\n");
    fmt::print(out, "  K = {}\n  alpha = {}\n  delta = {}\n  gamma = {}\n", p.K, p.alphaPub, p.deltaPub, p.gammaPub);
    fmt::print(out, "  short slope = {}\n  core length cap = {}\n  defect cap = {}\n  tube radius = {:.10g}\n",
               p.shortSlope, p.coreLenCap, p.defectCap, p.tubeRadius);

    const DecisionConstants d = decision_constants(flags.mode, c);
    fmt::print(out, "\ndecision constants ({})\n", name(d.mode));
    fmt::print(out, "  alpha = {:.10g}\n  delta = {:.10g}\n  gamma = {:.10g}\n", d.alpha, d.delta, d.gamma);
    fmt::print(out, "  short slope = {:.10g}\n  core length cap = {:.10g}\n  defect cap = {:.10g}\n", d.shortSlope,
               d.coreLenCap, d.defectCap);
    return kExitOk;
  } catch (const InputError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    fmt::print(err, "internal error: {}\n", e.what());
    return kExitInternal;
  }
}

int cmd_bounds(const BoundsFlags& flags, std::ostream& out, std::ostream& err) {
  try {
    const VolumeDefect dv(flags.deltaV);
    const DecisionConstants d = decision_constants(flags.mode);
    fmt::print(out, "delta V = {:.10g} ({} constants)\n", dv.dv, name(d.mode));
    if (dv.dv <= 0) {
      fmt::print(out, "regime: {}\n", name(VerdictTag::ExcludedByVolume));
      return kExitOk;
    }

    const LhatWindow nice = lhat_sq_window(dv, BoundMode::Nice, d);
    const LhatWindow complicated = lhat_sq_window(dv, BoundMode::Complicated, d);
    print_window(out, "nice", nice);
    print_window(out, "complicated", complicated);
    fmt::print(out, "  {:<12} ell <= {:.10g}\n", "nice", ell_upper(dv, BoundMode::Nice, d));
    fmt::print(out, "  {:<12} ell <= {:.10g}\n", "complicated", ell_upper(dv, BoundMode::Complicated, d));
    fmt::print(out, "ell cap = {:.10g}\n", d.coreLenCap);
    fmt::print(out, "short slope threshold = {:.10g}\n", d.shortSlope);

    const LhatWindow& active = flags.boundMode == BoundMode::Nice ? nice : complicated;
    if (active.empty) {
      fmt::print(out, "regime: {}\n", name(VerdictTag::ShortSlopeOnly));
    } else {
      fmt::print(out, "geodesic ceiling = {:.10g}\n", ell_upper(dv, flags.boundMode, d));
      fmt::print(out, "regime: {}\n", name(VerdictTag::TwoRegimes));
    }
    return kExitOk;
  } catch (const InputError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    fmt::print(err, "internal error: {}\n", e.what());
    return kExitInternal;
  }
}

int cmd_test(const TestFlags& flags, std::ostream& out, std::ostream& err) {
  std::vector<ManifoldRecord> children;
  ManifoldRecord parent;
  try {
    if (flags.children.empty()) throw InputError("at least one --child is required");
    if (!(flags.epsilon >= 0)) throw InputError("--epsilon must be nonnegative");
    if (!(flags.tol > 0)) throw InputError("--tol must be positive");
    parent = load_manifold_file(flags.parent);
    for (const auto& path : flags.children) children.push_back(load_manifold_file(path));
  } catch (const SchemaError& e) {
    fmt::print(err, "invalid input: {}\n", e.what());
    return kExitBadInput;
  } catch (const InputError& e) {
    fmt::print(err, "invalid input: {}\n", e.what());
    return kExitBadInput;
  }

  try {
    ScreenOptions options;
    options.epsilon = flags.epsilon;
    options.boundMode = flags.boundMode;
    options.constantMode = flags.mode;
    std::optional<HKConstants> storage;
    if (flags.mode == ConstantMode::Computed) options.computed = &constants_for(flags.tol, storage);

    std::vector<std::future<ParentalVerdict>> pending;
    for (const auto& child : children)
      pending.push_back(std::async(std::launch::async, [&, &child = child] { return screen_pair(parent, child, options); }));

    nlohmann::json reports = nlohmann::json::array();
    for (std::size_t i = 0; i < children.size(); ++i) {
      Report r;
      r.constantMode = flags.mode;
      r.boundMode = flags.boundMode;
      r.quadTol = flags.tol;
      r.epsilon = flags.epsilon;
      r.parent = parent.name;
      r.child = children[i].name;
      r.verdict = pending[i].get();
      reports.push_back(report_to_json(r));
    }
    const nlohmann::json doc = reports.size() == 1 ? reports[0] : reports;
    if (flags.out) {
      std::ofstream file(*flags.out);
      if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", flags.out->string()));
      file << doc.dump(2) << '\n';
      for (const auto& rep : reports)
        fmt::print(out, "{} -> {}: {}\n", rep["parent"].get<std::string>(), rep["child"].get<std::string>(),
                   rep["verdict"]["tag"].get<std::string>());
    } else {
      out << doc.dump(2) << '\n';
    }
    return kExitOk;
  } catch (const InputError& e) {
    fmt::print(err, "invalid input: {}\n", e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    fmt::print(err, "internal error: {}\n", e.what());
    return kExitInternal;
  }
}

int cmd_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err) {
  try {
    if (flags.gridN < 2) throw InputError("--grid-n must be at least 2");
    if (flags.K != kK) fmt::print(out, "debug: K overridden to {}\n", flags.K);
    const auto reports = run_verification_suite(flags.gridN, flags.K);
    bool allPassed = true;
    fmt::print(out, "{:<52} {:<6} {:>12} {:>8}  {}\n", "check", "result", "worst", "grid", "detail");
    for (const auto& r : reports) {
      allPassed = allPassed && r.passed;
      fmt::print(out, "{:<52} {:<6} {:>12.3e} {:>8}  {}\n", r.checkName, r.passed ? "PASS" : "FAIL", r.worstViolation,
                 r.gridSize, r.detail);
    }
    fmt::print(out, "{} of {} checks passed\n",
               std::count_if(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; }),
               reports.size());
    return allPassed ? kExitOk : kExitInternal;
  } catch (const InputError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    fmt::print(err, "internal error: {}\n", e.what());
    return kExitInternal;
  }
}

}  // namespace hkdehn
