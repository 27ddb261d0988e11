#include <doctest.h>

#include <cmath>

#include "hkdehn/errors.hpp"
#include "hkdehn/hk_functions.hpp"
#include "hkdehn/sturm.hpp"

using namespace hkdehn;

namespace {

const double kSqrtThird = std::sqrt(1.0 / 3.0);
const double kPi = std::acos(-1.0);

double grid(double lo, double hi, int i, int n) { return lo + (hi - lo) * i / (n - 1); }

}  // namespace

TEST_SUITE("hkcore") {

TEST_CASE("domain endpoints are certified") {
  CHECK(domain_lo_down() < domain_lo_up());
  CHECK(std::nextafter(domain_lo_down(), 1.0) == domain_lo_up());
  CHECK(sqrt_third_down() < kSqrtThird + 1e-16);
  CHECK(sqrt_third_up() > kSqrtThird - 1e-16);
  CHECK(domain_lo_down() == doctest::Approx(0.4858682717566457).epsilon(1e-15));
  CHECK_THROWS_AS(TanhRadius::make(1.0), DomainError);
  CHECK_THROWS_AS(TanhRadius::make(0.48), DomainError);
  CHECK_THROWS_AS(TanhRadius::make(std::nan("")), DomainError);
  CHECK(TanhRadius::make(0.6).standing());
  CHECK_FALSE(TanhRadius::make(0.5).standing());
}

TEST_CASE("geometry at sqrt(1/3)") {
  const auto b = eval_geometry(TanhRadius::make(sqrt_third_up()));
  CHECK(b.h == doctest::Approx(2 * std::sqrt(3.0)).epsilon(1e-14));
  CHECK(b.hprime == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(1 / (2 * kPi * b.H) == doctest::Approx(0.1560122941819816).epsilon(1e-13));
  CHECK(std::abs(1 / (2 * kPi * b.H) - 0.156012) < 1e-6);

  const ExactForms& f = exact_forms();
  CHECK(f.hprime.at_square(make_rational(1, 3)) == 3);
  CHECK(f.h(make_rational(3, 5)) == make_rational(85, 24));
}

TEST_CASE("exact values of t, T, F and F~") {
  const ExactForms& f = exact_forms();
  CHECK(f.t.at_square(make_rational(1, 3)) == make_rational(1, 2));
  CHECK(f.T.at_square(make_rational(1, 3)) == make_rational(1, 8));
  CHECK(f.T(Rational(1)) == 1);
  CHECK(f.t(Rational(1)) == 1);
  CHECK(f.F(Rational(1)) == make_rational(-3, 2));
  CHECK(f.Ftilde(Rational(1)) == make_rational(1, 2));

  CHECK(eval_F(1.0) == -1.5);
  CHECK(eval_Ftilde(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(eval_T(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eval_t(sqrt_third_up()) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eval_T(sqrt_third_up()) == doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("F is negative and F~ changes sign once") {
  for (int i = 0; i < 1000; ++i) {
    const double z = grid(sqrt_third_up(), 1.0, i, 1000);
    CHECK(eval_F(z) < 0);
  }
  CHECK(eval_Ftilde(sqrt_third_up()) < 0);
  CHECK(eval_Ftilde(0.99) > 0);

  const RootEnclosure beta = refine_root(ftilde_numerator(), {make_rational(577, 1000), Rational(1)}, 1e-12);
  CHECK(sturm_count(ftilde_numerator(), make_rational(577, 1000), Rational(1)) == 1);
  // F~ straddles zero on the enclosure
  CHECK(sign(exact_forms().Ftilde(beta.lo)) * sign(exact_forms().Ftilde(beta.hi)) == -1);
  CHECK(sign(exact_forms().Ftilde(make_rational(2887, 5000))) < 0);
}

TEST_CASE("h' agrees with a central difference of h") {
  for (int i = 0; i < 1000; ++i) {
    const double z = grid(0.58, 0.99, i, 1000);
    const double step = 1e-6;
    const double fd = (eval_h(z + step) - eval_h(z - step)) / (2 * step);
    CAPTURE(z);
    CHECK(std::abs(fd - eval_hprime(z)) <= 1e-6 * std::abs(eval_hprime(z)));
  }
}

TEST_CASE("1 - z - 1/h = (1-z)^2/(1+z^2) and H increases") {
  for (int i = 0; i < 1000; ++i) {
    const double z = grid(sqrt_third_up() + 1e-6, 1 - 1e-6, i, 1000);
    const double lhs = 1 - z - 1 / eval_h(z);
    CHECK(lhs == doctest::Approx((1 - z) * (1 - z) / (1 + z * z)).epsilon(1e-9));
    CHECK(lhs >= 0);
  }
  for (int i = 0; i < 1000; ++i) CHECK(eval_hprime(grid(domain_lo_up() + 1e-6, 1 - 1e-6, i, 1000)) > 0);
  CHECK(eval_h(0.6) == doctest::Approx(85.0 / 24).epsilon(1e-15));
  CHECK(1 / eval_h(0.6) <= 0.4);
}

TEST_CASE("closed forms of t and T agree with direct evaluation") {
  for (int i = 0; i < 1000; ++i) {
    const double z = grid(sqrt_third_up() + 1e-6, 1 - 1e-6, i, 1000);
    const auto b = eval_geometry(TanhRadius::make(z));
    const double tDirect = b.hprime / (b.h * (b.h - b.gt));
    const double TDirect = b.hprime / (b.h * (b.h + b.g));
    const Integrands in = eval_integrands(z);
    CAPTURE(z);
    CHECK(std::abs(in.t - tDirect) <= 1e-10 * std::abs(tDirect));
    CHECK(std::abs(in.T - TDirect) <= 1e-10 * std::abs(TDirect));
    CHECK(in.t > 0);
    CHECK(in.T > 0);
    const double FDirect = b.hprime / (b.h + b.g) - 1 / (1 - z);
    CHECK(std::abs(eval_F(z) - FDirect) <= 1e-9 * (1 + std::abs(FDirect)));
  }
}

TEST_CASE("F~ numerator has integer coefficients") {
  const RationalPoly p = ftilde_numerator();
  CHECK(p.degree() == 6);
  for (const auto& c : p.coeffs()) CHECK(c.get_den() == 1);
}

TEST_CASE("positive root of z^4 + 4z^2 - 1 is sqrt(sqrt 5 - 2)") {
  const RootEnclosure e = refine_root(exact_forms().hprime.numerator(), {Rational(0), Rational(1)}, 1e-12);
  CHECK(e.width() <= Rational(1e-12));
  const double rho = std::sqrt(std::sqrt(5.0) - 2);
  CHECK(e.lo_down() <= rho + 1e-15);
  CHECK(e.hi_up() >= rho - 1e-15);
}

}  // TEST_SUITE
