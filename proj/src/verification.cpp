#include "hkdehn/verification.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>

#include <fmt/core.h>

#include "hkdehn/calculus.hpp"

namespace hkdehn {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

std::vector<double> grid(double a, double b, long n) {
  std::vector<double> z(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return z;
}

// Worst signed slack over a grid; the claim holds where slack <= 0.
template <class Fn>
CheckReport grid_check(std::string name, const std::vector<double>& z, Fn violation) {
  CheckReport r;
  r.checkName = std::move(name);
  r.gridSize = static_cast<long>(z.size());
  r.worstViolation = -std::numeric_limits<double>::infinity();
  double worstAt = 0.0;
  for (double x : z) {
    const double v = violation(x);
    if (!(v <= r.worstViolation)) {
      r.worstViolation = v;
      worstAt = x;
    }
  }
  r.passed = r.worstViolation <= 0.0;
  r.detail = fmt::format("worst at z = {:.12f}", worstAt);
  return r;
}

CheckReport exact_check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, ok ? -1.0 : 1.0, 0, std::move(detail)};
}

// Upper/lower tolerance checks on a scalar.
CheckReport bound_check(std::string name, double value, double bound, bool upper) {
  const double v = upper ? value - bound : bound - value;
  return {std::move(name), v <= 0.0, v, 0, fmt::format("value {:.12g} vs {} {}", value, upper ? "<=" : ">=", bound)};
}

CheckReport near_check(std::string name, double value, double target, double tol) {
  const double v = std::abs(value - target) - tol;
  return {std::move(name), v <= 0.0, v, 0, fmt::format("value {:.12g}, target {} +/- {}", value, target, tol)};
}

// Does p vanish anywhere in (a, b)? Sturm count with endpoint guard.
int roots_in(const RationalPoly& p, const Rational& a, const Rational& b) { return sturm_count(p, a, b); }

const Rational& bracket_lo() {
  static const Rational lo = make_rational(577, 1000);  // just below sqrt(1/3)
  return lo;
}

}  // namespace

std::string_view name(MonotoneKind kind) {
  switch (kind) {
    case MonotoneKind::LB: return "LB";
    case MonotoneKind::UB: return "UB";
    case MonotoneKind::H: return "H";
    case MonotoneKind::F: return "f";
    case MonotoneKind::Ftilde: return "f~";
  }
  return "?";
}

CheckReport check_monotonicity(MonotoneKind kind, long gridN) {
  if (gridN < 2) throw std::invalid_argument("check_monotonicity needs gridN >= 2");
  const double lo = kind == MonotoneKind::Ftilde ? sqrt_third_up() : domain_lo_up();
  const auto z = grid(lo + kGridInset, 1.0 - kGridInset, gridN);

  std::vector<double> v(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    switch (kind) {
      case MonotoneKind::LB: v[i] = eval_volume_integral(z[i], VolumeKind::LB); break;
      case MonotoneKind::UB: v[i] = eval_volume_integral(z[i], VolumeKind::UB); break;
      case MonotoneKind::H: v[i] = eval_h(z[i]) / kK; break;
      case MonotoneKind::F: v[i] = eval_f(z[i], Variant::Plain); break;
      case MonotoneKind::Ftilde: v[i] = eval_f(z[i], Variant::Tilde); break;
    }
  }
  const bool increasing = kind == MonotoneKind::H;
  CheckReport r;
  r.checkName = fmt::format("{} {}", name(kind), increasing ? "increasing" : "decreasing");
  r.gridSize = gridN;
  r.worstViolation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double step = v[i + 1] - v[i];
    const double violation = increasing ? kMonotoneSlack - step : step + kMonotoneSlack;
    r.worstViolation = std::max(r.worstViolation, violation);
  }
  r.passed = r.worstViolation <= 0.0;
  r.detail = fmt::format("on ({:.9f}, {:.9f}), slack {}", z.front(), z.back(), kMonotoneSlack);
  return r;
}

std::vector<CheckReport> check_envelopes(long gridN, const HKConstants& c) {
  if (gridN < 2) throw std::invalid_argument("check_envelopes needs gridN >= 2");
  const auto z = grid(sqrt_third_up() + kGridInset, 1.0 - kGridInset, gridN);
  const double beta = c.beta.midpoint();

  std::vector<CheckReport> out;
  out.push_back(grid_check("1/h <= 1-z", z, [](double x) { return 1.0 / eval_h(x) - (1.0 - x); }));
  out.push_back(grid_check("f >= A(1-z)", z, [&](double x) { return c.A * (1.0 - x) - eval_f(x, Variant::Plain); }));
  // f~(z) = B(1-z) exp(-(Phi~(z) - Phi~(beta))); the exponent is one
  // sign-definite integral, so nothing cancels near beta.
  out.push_back(grid_check("f~ <= B(1-z)", z, [&](double x) {
    const double rise = x >= beta ? integrate(eval_Ftilde, beta, x).value : -integrate(eval_Ftilde, x, beta).value;
    return c.B * (1.0 - x) * std::expm1(-rise);
  }));
  out.push_back(grid_check("LB >= C(1-z)", z, [&](double x) {
    return c.C * (1.0 - x) - eval_volume_integral(x, VolumeKind::LB, c.K);
  }));
  out.push_back(grid_check("UB <= D(1-z)", z, [&](double x) {
    return eval_volume_integral(x, VolumeKind::UB, c.K) - c.D * (1.0 - x);
  }));
  return out;
}

std::vector<CheckReport> check_sign_facts() {
  const RationalPoly z = variable<Rational>();
  const RationalPoly one = RationalPoly::constant(1);
  const Rational lo = bracket_lo();
  const Rational hi = 1;
  std::vector<CheckReport> out;

  const RationalPoly p{3, 0, -26, 0, 88, 0, -6, 0, 5};
  out.push_back(exact_check("p(z) = 5z^8-6z^6+88z^4-26z^2+3 > 0 on (sqrt(1/3),1)",
                            roots_in(p, lo, hi) == 0 && p(Rational(0)) > 0 && p(lo) > 0,
                            fmt::format("Sturm count {} on ({}, 1); p(0) = {}", roots_in(p, lo, hi),
                                        to_string(lo), to_string(p(Rational(0))))));
  out.push_back(exact_check("p has no real roots", roots_in(p, Rational(-100), Rational(100)) == 0,
                            "Sturm count on (-100, 100); |roots| are bounded by 1 + 88/5"));
  const Rational disc1 = Rational(36) - 4 * 5 * 2;
  const Rational disc2 = Rational(676) - 4 * 86 * 3;
  out.push_back(exact_check("discriminants of 5u^2-6u+2 and 86u^2-26u+3 negative", disc1 < 0 && disc2 < 0,
                            fmt::format("{} and {}", to_string(disc1), to_string(disc2))));

  const RationalPoly q{1, 0, -10, 0, 1};
  out.push_back(exact_check("z^4-10z^2+1 has no root in (sqrt(1/3),1)", roots_in(q, lo, hi) == 0 && q(hi) < 0,
                            fmt::format("Sturm count {}; value at 1 is {}", roots_in(q, lo, hi), to_string(q(hi)))));

  const ExactForms& forms = exact_forms();
  const RationalPoly hnum{-1, 0, 4, 0, 1};
  out.push_back(exact_check("h' = (z^4+4z^2-1)/(z^2(1-z^2)^2)",
                            forms.hprime == RationalFunction(hnum, z * z * pow(one - z * z, 2)),
                            "exact derivative of h"));

  // t' = c * z(1-z)(1+z) p(z) / (positive denominator).
  const RationalFunction tprime = derivative(forms.t);
  const auto [tq, tr] = divmod(tprime.numerator(), z * (one - z) * (one + z) * p);
  const bool tq_const = tr.is_zero() && tq.degree() == 0 && tq.leading() > 0;
  const bool tden_pos = roots_in(tprime.denominator(), lo, hi) == 0 && tprime.denominator()(hi) > 0;
  out.push_back(exact_check("t' > 0 on (sqrt(1/3),1)", tq_const && tden_pos,
                            fmt::format("t' numerator = {} * z(1-z)(1+z)p(z)", tq.is_zero() ? "?" : to_string(tq.leading()))));

  // T' = c * z(z^4-10z^2+1) / (z^2+1)^4 with c < 0.
  const RationalFunction Tprime = derivative(forms.T);
  const auto [Tq, Tr] = divmod(Tprime.numerator(), z * q);
  const bool Tq_neg = Tr.is_zero() && Tq.degree() == 0 && Tq.leading() < 0;
  out.push_back(exact_check("T' > 0 on (sqrt(1/3),1)",
                            Tq_neg && Tprime.denominator() == pow(RationalPoly{1, 0, 1}, 4) && q(hi) < 0,
                            fmt::format("T' numerator = {} * z(z^4-10z^2+1)", Tq.is_zero() ? "?" : to_string(Tq.leading()))));

  out.push_back(exact_check("t(sqrt(1/3)) and T(1)",
                            forms.t.at_square(Rational(1, 3)) == Rational(1, 2) && forms.T(Rational(1)) == 1,
                            fmt::format("t(sqrt(1/3)) = {}, T(1) = {}", to_string(forms.t.at_square(Rational(1, 3))),
                                        to_string(forms.T(Rational(1))))));

  const RationalPoly fnum{1, 4, 6, 0, 1};
  out.push_back(exact_check("F < 0 on (sqrt(1/3),1)",
                            forms.F == RationalFunction(-fnum, (one + z) * pow(one + z * z, 2)) &&
                                roots_in(fnum, lo, hi) == 0 && fnum(hi) > 0,
                            "F = -(z^4+6z^2+4z+1)/((z+1)(z^2+1)^2)"));

  const RationalPoly ftn = ftilde_numerator();
  const Rational inner = make_rational(5774, 10000);
  const int outer_roots = roots_in(ftn, lo, hi);
  const int inner_roots = roots_in(ftn, inner, hi);
  const Rational ft_inner = forms.Ftilde(inner);
  out.push_back(exact_check("F~ has exactly one root beta in (sqrt(1/3),1)",
                            outer_roots == 1 && inner_roots == 1 && ft_inner < 0 && forms.Ftilde(hi) > 0,
                            fmt::format("Sturm counts {} / {}; F~({}) < 0, F~(1) = {}", outer_roots, inner_roots,
                                        to_string(inner), to_string(forms.Ftilde(hi)))));

  const RationalFunction zf(z);
  const RationalFunction onef(one);
  out.push_back(exact_check("1 - z - 1/h = (1-z)^2/(1+z^2)",
                            onef - zf - onef / forms.h == RationalFunction(pow(one - z, 2), one + z * z),
                            "exact rational-function identity"));

  const RootEnclosure root = refine_root(hnum, {Rational(0), Rational(1)}, 1e-12);
  const double expected = std::sqrt(std::sqrt(5.0) - 2.0);
  out.push_back(exact_check("positive root of z^4+4z^2-1 is sqrt(sqrt 5 - 2)",
                            root.lo_down() <= expected + 1e-15 && root.hi_up() >= expected - 1e-15 &&
                                root.width() <= to_rational(1e-12),
                            fmt::format("enclosure [{:.15f}, {:.15f}]", root.lo_down(), root.hi_up())));
  return out;
}

std::vector<CheckReport> check_constant_consistency(const HKConstants& c, double K) {
  const auto& pub = published_constants();
  std::vector<CheckReport> out;
  out.push_back(bound_check("alpha <= 2.879", c.alpha, pub.alphaPub, true));
  out.push_back(bound_check("delta >= 4.563", c.delta, pub.deltaPub, false));
  out.push_back(bound_check("gamma <= 20.633", c.gamma, pub.gammaPub, true));
  const double rel = std::abs(c.alpha * std::numbers::pi * c.delta - 2.0 * c.gamma) / (2.0 * c.gamma);
  out.push_back({"alpha * pi * delta = 2 gamma", rel <= 1e-9, rel - 1e-9, 0, fmt::format("relative error {:.3g}", rel)});

  const double r = std::sqrt(1.0 / 3.0);
  out.push_back(near_check("2 pi / sqrt(f(sqrt(1/3))) = 7.5832", kTwoPi / std::sqrt(eval_f(r, Variant::Plain, K)),
                           pub.shortSlope, 1e-3));
  out.push_back(near_check("1 / (2 pi H(sqrt(1/3))) = 0.156012", K / (kTwoPi * eval_h(r)), pub.coreLenCap, 1e-6));
  out.push_back(near_check("UB(sqrt(1/3)) = 0.198", eval_volume_integral(r, VolumeKind::UB, K), pub.defectCap, 5e-4));
  return out;
}

std::vector<CheckReport> run_verification_suite(long gridN, double K) {
  const HKConstants& constants = default_constants();
  std::vector<std::future<std::vector<CheckReport>>> jobs;
  for (MonotoneKind kind :
       {MonotoneKind::LB, MonotoneKind::UB, MonotoneKind::H, MonotoneKind::F, MonotoneKind::Ftilde})
    jobs.push_back(std::async(std::launch::async, [kind, gridN] { return std::vector{check_monotonicity(kind, gridN)}; }));
  jobs.push_back(std::async(std::launch::async, [gridN, &constants] { return check_envelopes(gridN, constants); }));
  jobs.push_back(std::async(std::launch::async, [] { return check_sign_facts(); }));
  jobs.push_back(std::async(std::launch::async, [&constants, K] { return check_constant_consistency(constants, K); }));

  std::vector<CheckReport> out;
  for (auto& job : jobs) {
    auto part = job.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace hkdehn
