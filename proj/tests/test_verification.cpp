#include <doctest.h>

#include <algorithm>
#include <string>

#include "hkdehn/verification.hpp"

using namespace hkdehn;

namespace {

const CheckReport& find(const std::vector<CheckReport>& reports, std::string_view prefix) {
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [&](const CheckReport& r) { return r.checkName.rfind(prefix, 0) == 0; });
  REQUIRE(it != reports.end());
  return *it;
}

}  // namespace

TEST_SUITE("verification") {

TEST_CASE("monotonicity checks") {
  for (MonotoneKind kind :
       {MonotoneKind::LB, MonotoneKind::UB, MonotoneKind::H, MonotoneKind::F, MonotoneKind::Ftilde}) {
    const CheckReport r = check_monotonicity(kind, 10'000);
    CAPTURE(r.checkName);
    CHECK(r.passed);
    CHECK(r.worstViolation <= 0);
    CHECK(r.gridSize == 10'000);
  }
}

TEST_CASE("envelopes") {
  const auto reports = check_envelopes(10'000);
  CHECK(reports.size() == 5);
  for (const auto& r : reports) {
    CAPTURE(r.checkName);
    CHECK(r.passed);
  }
}

TEST_CASE("sign facts") {
  const auto reports = check_sign_facts();
  for (const auto& r : reports) {
    CAPTURE(r.checkName);
    CHECK(r.passed);
    CHECK(r.gridSize == 0);
  }
  CHECK(find(reports, "discriminants").detail.find("-356") != std::string::npos);
  CHECK(find(reports, "t(sqrt(1/3))").detail.find("1/2") != std::string::npos);
}

TEST_CASE("constant consistency and its negative control") {
  for (const auto& r : check_constant_consistency(default_constants())) {
    CAPTURE(r.checkName);
    CHECK(r.passed);
  }
  ConstantOptions opts;
  opts.K = 3.5;
  const auto corrupted = check_constant_consistency(compute_constants(opts), 3.5);
  CHECK(std::any_of(corrupted.begin(), corrupted.end(), [](const CheckReport& r) { return !r.passed; }));
  CHECK_FALSE(find(corrupted, "2 pi / sqrt").passed);
  CHECK(find(corrupted, "alpha <=").passed);
}

TEST_CASE("suite passes and is stable under refinement") {
  const auto coarse = run_verification_suite(5'000);
  const auto fine = run_verification_suite(10'000);
  REQUIRE(coarse.size() == fine.size());
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    CAPTURE(fine[i].checkName);
    CHECK(fine[i].passed);
    CHECK(coarse[i].checkName == fine[i].checkName);
    CHECK(coarse[i].passed == fine[i].passed);
  }
  // deterministic given tolerances
  const auto again = run_verification_suite(5'000);
  for (std::size_t i = 0; i < coarse.size(); ++i) CHECK(again[i].worstViolation == coarse[i].worstViolation);
}

}  // TEST_SUITE
