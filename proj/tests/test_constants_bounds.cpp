#include <doctest.h>

#include <cmath>
#include <vector>

#include "hkdehn/bounds.hpp"
#include "hkdehn/calculus.hpp"
#include "hkdehn/errors.hpp"

using namespace hkdehn;

namespace {

const double kPi = std::acos(-1.0);

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 1; i <= n; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n + 1)));
  return out;
}

}  // namespace

TEST_SUITE("constants") {

TEST_CASE("published table") {
  const PublishedConstants& p = published_constants();
  CHECK(p.shortSlope == 7.5832);
  CHECK(p.coreLenCap == 0.156012);
  CHECK(p.defectCap == 0.198);
  CHECK(p.K == 3.3957);
  CHECK(p.tubeRadius == doctest::Approx(std::atanh(1 / std::sqrt(3.0))).epsilon(1e-15));
  CHECK(&published_constants() == &p);
}

TEST_CASE("derived constants") {
  const HKConstants& c = default_constants();
  CHECK(c.D == doctest::Approx(0.848925).epsilon(1e-15));
  CHECK(c.C == doctest::Approx(0.4244625).epsilon(1e-15));
  CHECK(c.tAtSqrtThird == make_rational(1, 2));
  CHECK(c.A == doctest::Approx(1.624352279634478).epsilon(1e-10));
  CHECK(c.B == doctest::Approx(3.672360494661101).epsilon(1e-10));

  CHECK(c.alpha <= 2.879);
  CHECK(c.alpha > 2.87);
  CHECK(c.delta >= 4.563);
  CHECK(c.delta < 4.58);
  CHECK(c.gamma <= 20.633);
  CHECK(c.gamma > 20.5);
  CHECK(c.alpha == doctest::Approx(2.878559449787503).epsilon(1e-10));
  CHECK(c.delta == doctest::Approx(4.563034554137901).epsilon(1e-10));
  CHECK(c.gamma == doctest::Approx(20.63235671533069).epsilon(1e-10));
  CHECK(std::abs(c.alpha * kPi * c.delta - 2 * c.gamma) <= 1e-9 * 2 * c.gamma);

  CHECK(c.shortSlope > 7.583);
  CHECK(c.shortSlope < 7.585);
  CHECK(c.coreLenCap > 0.156011);
  CHECK(c.coreLenCap < 0.156013);
  CHECK(c.defectCap == doctest::Approx(0.1978157620997794).epsilon(1e-11));
  CHECK(c.lbAtSqrtThird == doctest::Approx(0.3055699842773324).epsilon(1e-11));
  CHECK(c.phiAtSqrtThird == doctest::Approx(0.7374007861516191).epsilon(1e-11));
  CHECK(c.phiTildeAtBeta == doctest::Approx(-0.07832471654246782).epsilon(1e-10));
}

TEST_CASE("beta enclosure") {
  const HKConstants& c = default_constants();
  CHECK(c.beta.width() <= Rational(1e-12));
  CHECK(c.beta.lo_down() <= 0.7234276292243508);
  CHECK(c.beta.hi_up() >= 0.7234276292243508);
  const RootEnclosure bracket = beta_bracket();
  CHECK(bracket.lo == make_rational(577, 1000));
  CHECK(bracket.hi == 1);
  CHECK(certify_beta(1e-6).width() <= Rational(1e-6));
}

TEST_CASE("stability under tolerance") {
  ConstantOptions loose;
  loose.quadTol = 1e-10;
  const HKConstants a = compute_constants(loose);
  const HKConstants& b = default_constants();
  CHECK(std::abs(a.alpha - b.alpha) <= 1e-8);
  CHECK(std::abs(a.delta - b.delta) <= 1e-8);
  CHECK(std::abs(a.gamma - b.gamma) <= 1e-8);
}

TEST_CASE("K moves only the K-dependent fields") {
  ConstantOptions opts;
  opts.K = 3.5;
  const HKConstants k = compute_constants(opts);
  const HKConstants& c = default_constants();
  CHECK(k.alpha == doctest::Approx(c.alpha).epsilon(1e-12));
  CHECK(k.delta == doctest::Approx(c.delta).epsilon(1e-12));
  CHECK(k.gamma == doctest::Approx(c.gamma).epsilon(1e-12));
  CHECK(k.D == doctest::Approx(3.5 / 4));
  CHECK(k.defectCap > c.defectCap);
}

TEST_CASE("decision constants") {
  const DecisionConstants pub = decision_constants(ConstantMode::Published);
  CHECK(pub.alpha == 2.879);
  CHECK(pub.delta == 4.563);
  CHECK(pub.gamma == 20.633);
  const DecisionConstants comp = decision_constants(ConstantMode::Computed);
  CHECK(comp.alpha == default_constants().alpha);
  CHECK(comp.defectCap == default_constants().defectCap);
  CHECK(parse_constant_mode("computed") == ConstantMode::Computed);
  CHECK(name(ConstantMode::Published) == "published");
  CHECK_THROWS_AS(parse_constant_mode("exact"), InputError);
}

}  // TEST_SUITE

TEST_SUITE("bounds") {

TEST_CASE("defect and core-length brackets") {
  const TanhRadius s = TanhRadius::make(std::nextafter(sqrt_third_up(), 1.0));
  const TanhRadius z9 = TanhRadius::make(0.9);
  CHECK(volume_defect_bracket(z9, s).second == doctest::Approx(0.1978157620997794).epsilon(1e-11));
  CHECK(volume_defect_bracket(s, z9).first == doctest::Approx(0.3055699842773324).epsilon(1e-11));
  CHECK(core_length_bounds(z9, s).second == doctest::Approx(0.1560122941819816).epsilon(1e-12));
  const auto [lmin, lmax] = core_length_bounds(z9, z9);
  CHECK(lmin == lmax);
  CHECK(core_length_bounds(s, z9).second <= kK * (1 - 0.9) / (2 * kPi));
  CHECK_THROWS_AS(volume_defect_bracket(TanhRadius::make(0.5), z9), DomainError);
}

TEST_CASE("ell_upper") {
  const DecisionConstants pub = decision_constants(ConstantMode::Published);
  CHECK(ell_upper(VolumeDefect(0.1), BoundMode::Nice, pub) == 0.156012);
  CHECK(ell_upper(VolumeDefect(0.01), BoundMode::Nice, pub) == doctest::Approx(0.02879).epsilon(1e-15));
  CHECK(ell_upper(VolumeDefect(0.01), BoundMode::Complicated, pub) <= 0.02879);
  CHECK(ell_upper(VolumeDefect(0.5), BoundMode::Complicated, pub) == 0.156012);
  CHECK_THROWS_AS(ell_upper(VolumeDefect(0.0), BoundMode::Nice, pub), InputError);
  CHECK_THROWS_AS(VolumeDefect(std::nan("")), InputError);
}

TEST_CASE("lhat_sq_window") {
  const DecisionConstants pub = decision_constants(ConstantMode::Published);
  const LhatWindow w = lhat_sq_window(VolumeDefect(0.1), BoundMode::Nice, pub);
  CHECK_FALSE(w.empty);
  CHECK(w.loSq == doctest::Approx(45.63).epsilon(1e-14));
  CHECK(w.hiSq == doctest::Approx(206.33).epsilon(1e-14));
  CHECK(lhat_sq_window(VolumeDefect(0.5), BoundMode::Nice, pub).empty);
  CHECK(lhat_sq_window(VolumeDefect(0.5), BoundMode::Complicated, pub).empty);
  const LhatWindow c = lhat_sq_window(VolumeDefect(0.1), BoundMode::Complicated, pub);
  CHECK(c.loSq >= w.loSq);
  CHECK(c.hiSq <= w.hiSq);
  CHECK(w.contains(49.0));
  CHECK_FALSE(w.contains(45.0));
  CHECK_FALSE(LhatWindow::none().contains(0.0));
}

TEST_CASE("complicated bounds are dominated by the nice ones") {
  for (ConstantMode mode : {ConstantMode::Published, ConstantMode::Computed}) {
    const DecisionConstants d = decision_constants(mode);
    for (double dv : log_grid(1e-4, 0.15, 100)) {
      CAPTURE(dv);
      const VolumeDefect v(dv);
      const LhatWindow nice = lhat_sq_window(v, BoundMode::Nice, d);
      const LhatWindow comp = lhat_sq_window(v, BoundMode::Complicated, d);
      CHECK(ell_upper(v, BoundMode::Complicated, d) <= ell_upper(v, BoundMode::Nice, d));
      if (comp.empty) continue;
      CHECK_FALSE(nice.empty);
      CHECK(comp.loSq >= nice.loSq * (1 - 1e-9));
      CHECK(comp.hiSq <= nice.hiSq * (1 + 1e-9));
    }
  }
}

TEST_CASE("window emptiness is monotone and the nice window scales as 1/dv") {
  const DecisionConstants pub = decision_constants(ConstantMode::Published);
  for (BoundMode mode : {BoundMode::Nice, BoundMode::Complicated}) {
    bool seenEmpty = false;
    for (int i = 1; i <= 300; ++i) {
      const double dv = 0.001 * i;
      const bool empty = lhat_sq_window(VolumeDefect(dv), mode, pub).empty;
      if (seenEmpty) CHECK(empty);
      seenEmpty = seenEmpty || empty;
    }
    CHECK(seenEmpty);
  }
  double prevHi = INFINITY;
  for (double dv : log_grid(1e-4, 0.15, 100)) {
    const LhatWindow w = lhat_sq_window(VolumeDefect(dv), BoundMode::Nice, pub);
    CHECK(w.loSq * dv == doctest::Approx(4.563).epsilon(1e-15));
    CHECK(w.hiSq * dv == doctest::Approx(20.633).epsilon(1e-15));
    CHECK(w.hiSq < prevHi);
    prevHi = w.hiSq;
  }
}

TEST_CASE("bound mode names") {
  CHECK(parse_bound_mode("nice") == BoundMode::Nice);
  CHECK(parse_bound_mode("complicated") == BoundMode::Complicated);
  CHECK(name(BoundMode::Complicated) == "complicated");
  CHECK_THROWS_AS(parse_bound_mode("loose"), InputError);
}

}  // TEST_SUITE
