#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hkdehn/hk_functions.hpp"
#include "hkdehn/polynomial.hpp"
#include "hkdehn/rational_function.hpp"
#include "hkdehn/sturm.hpp"

using namespace hkdehn;

namespace {

RationalPoly poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

const RationalPoly kHNum = poly({-1, 0, 4, 0, 1});                   // z^4 + 4z^2 - 1
const RationalPoly kP = poly({3, 0, -26, 0, 88, 0, -6, 0, 5});       // 5z^8 - 6z^6 + 88z^4 - 26z^2 + 3
const RationalPoly kTPrimeFactor = poly({1, 0, -10, 0, 1});          // z^4 - 10z^2 + 1

}  // namespace

TEST_SUITE("polyalg") {

TEST_CASE("evaluation is exact") {
  CHECK(kHNum(Rational(0)) == -1);
  CHECK(in_square(kHNum)(make_rational(1, 3)) == make_rational(4, 9));
  CHECK(kP(Rational(0)) == 3);
  CHECK(kHNum(make_rational(1, 2)) == make_rational(1, 16) + 1 - 1);
  // p - p vanishes identically and at every rational point
  const RationalPoly zero = kP - kP;
  CHECK(zero.is_zero());
  CHECK(zero(make_rational(-7, 3)) == 0);
}

TEST_CASE("derivative") {
  CHECK(derivative(kHNum) == poly({0, 8, 0, 4}));
  CHECK(derivative(RationalPoly::constant(3)).is_zero());
  CHECK(derivative(poly({0, 0, 1})) == poly({0, 2}));
  CHECK(derivative(RationalPoly{}).is_zero());
}

TEST_CASE("degree, trimming and arithmetic") {
  CHECK(RationalPoly{}.degree() == -1);
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  const auto z = variable<Rational>();
  CHECK((z + RationalPoly::constant(1)) * (z - RationalPoly::constant(1)) == poly({-1, 0, 1}));
  CHECK(pow(z, 3) == poly({0, 0, 0, 1}));
  const auto [q, r] = divmod(kHNum, poly({-1, 1}));
  CHECK(q * poly({-1, 1}) + r == kHNum);
  CHECK(r.degree() <= 0);
  CHECK(gcd(poly({-1, 0, 1}), poly({1, 1})) == poly({1, 1}));
  CHECK(to_string(poly({-1, 0, 4, 0, 1})) == "z^4 + 4*z^2 - 1");
}

TEST_CASE("sturm counts") {
  CHECK(sturm_count(poly({-2, 0, 1}), Rational(1), Rational(2)) == 1);
  CHECK(sturm_count(kTPrimeFactor, make_rational(7, 12), Rational(1)) == 0);
  CHECK(sturm_count(kP, make_rational(7, 12), Rational(1)) == 0);
  CHECK(sturm_count(ftilde_numerator(), make_rational(577, 1000), Rational(1)) == 1);
  CHECK(sturm_count(kTPrimeFactor, Rational(-10), Rational(10)) == 4);
  CHECK_THROWS_AS(sturm_count(poly({-1, 1}), Rational(1), Rational(2)), EndpointRootError);
  CHECK_THROWS(sturm_count(poly({-1, 1}), Rational(2), Rational(0)));
}

TEST_CASE("refine_root") {
  const RootEnclosure sqrt2 = refine_root(poly({-2, 0, 1}), {Rational(1), Rational(2)}, 1e-12);
  CHECK(sqrt2.width() <= Rational(1e-12));
  CHECK(sqrt2.lo_down() <= 1.4142135623730951);
  CHECK(sqrt2.hi_up() >= 1.4142135623730949);

  const RootEnclosure rho = refine_root(kHNum, {Rational(0), Rational(1)}, 1e-12);
  CHECK(rho.width() <= Rational(1e-12));
  CHECK(rho.midpoint() == doctest::Approx(0.4858682717566457).epsilon(1e-12));
  CHECK(sign(kHNum(rho.lo)) * sign(kHNum(rho.hi)) == -1);

  const RootEnclosure beta = refine_root(ftilde_numerator(), {make_rational(577, 1000), Rational(1)}, 1e-12);
  CHECK(beta.midpoint() == doctest::Approx(0.7234276292243508).epsilon(1e-11));

  // exact rational root hit during bisection
  const RootEnclosure half = refine_root(poly({-1, 2}), {Rational(0), Rational(1)}, 1e-9);
  CHECK(half.lo < make_rational(1, 2));
  CHECK(half.hi > make_rational(1, 2));

  CHECK_THROWS(refine_root(poly({-2, 0, 1}), {Rational(1), Rational(2)}, 0.0));
  CHECK_THROWS(refine_root(kTPrimeFactor, {Rational(-10), Rational(10)}, 1e-9));
}

TEST_CASE("sturm count matches known roots on random polynomials") {
  std::mt19937 rng(20261019);
  std::uniform_int_distribution<int> degree(1, 6);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 7);

  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> roots;
    RationalPoly p = RationalPoly::constant(Rational(num(rng) == 0 ? 1 : 3));
    const int n = degree(rng);
    for (int i = 0; i < n; ++i) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      roots.push_back(r);
      p = p * RationalPoly({-r, Rational(1)});
    }
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    if (std::find(roots.begin(), roots.end(), a) != roots.end() ||
        std::find(roots.begin(), roots.end(), b) != roots.end())
      continue;

    std::set<Rational> distinct;
    for (const auto& r : roots)
      if (a < r && r < b) distinct.insert(r);
    CAPTURE(trial);
    CHECK(sturm_count(p, a, b) == static_cast<int>(distinct.size()));
  }
}

TEST_CASE("refinement keeps a sign change") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(1, 99);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational r = make_rational(num(rng), 100);
    const RationalPoly p = RationalPoly({-r, Rational(1)}) * poly({1, 0, 1});
    const RootEnclosure e = refine_root(p, {Rational(0), Rational(1)}, 1e-10);
    CHECK(e.lo < r);
    CHECK(r < e.hi);
    CHECK(e.width() <= Rational(1e-10));
  }
}

TEST_CASE("rational functions reduce to lowest terms") {
  const RationalFunction r(poly({-1, 0, 1}), poly({2, 2}));
  CHECK(r.numerator() == poly({-1, 1}) * Rational(make_rational(1, 2)));
  CHECK(r.denominator() == poly({1}));
  CHECK(r(Rational(3)) == 1);
  const RationalFunction inv(poly({1}), poly({0, 1}));
  CHECK_THROWS(inv(Rational(0)));
  CHECK(derivative(inv) == RationalFunction(poly({-1}), poly({0, 0, 1})));
  CHECK(inv * RationalFunction(poly({0, 1})) == RationalFunction(poly({1})));
}

}  // TEST_SUITE
