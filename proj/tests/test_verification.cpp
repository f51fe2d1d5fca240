#include <doctest.h>

#include <set>

#include "su2cs/verification.hpp"

using namespace su2cs;

TEST_CASE("registry names are unique and cover every acceptance group") {
  std::set<std::string> names;
  std::set<int> groups;
  for (const CheckSpec& c : check_registry()) {
    CHECK(names.insert(c.name).second);
    CHECK(c.tolerance >= 0.0);
    CHECK(c.group >= 0);
    CHECK(c.group <= 10);
    groups.insert(c.group);
  }
  for (int g = 1; g <= 10; ++g) CHECK(groups.count(g) == 1);
}

TEST_CASE("every check passes on a small configuration") {
  const VerifyConfig cfg{HalfInt::from_int(3), 8, 99};
  const VerificationReport r = run_verification(cfg);
  CHECK(r.checks.size() == check_registry().size());
  for (const Check& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.max_error);
    CAPTURE(c.note);
    CHECK(c.passed);
  }
  CHECK(r.overall);
}

TEST_CASE("check results depend only on seed and name") {
  const VerifyConfig cfg{HalfInt::from_int(3), 8, 5};
  const auto only = [](const CheckSpec& c) { return c.name == "coherent.pncs_vs_exponential"; };
  const VerificationReport a = run_verification(cfg, only);
  const VerificationReport b = run_verification(cfg);
  REQUIRE(a.checks.size() == 1);
  for (const Check& c : b.checks)
    if (c.name == a.checks[0].name) CHECK(c.max_error == a.checks[0].max_error);
}

TEST_CASE("a throwing check fails with a note") {
  const CheckSpec bad{"test.throws", 0, 1.0, [](const VerifyConfig&, std::uint64_t) -> double {
                        throw std::runtime_error("boom");
                      }};
  const Check c = run_check(bad, VerifyConfig{});
  CHECK_FALSE(c.passed);
  CHECK(c.note.find("boom") != std::string::npos);

  const CheckSpec nan{"test.nan", 0, 1.0, [](const VerifyConfig&, std::uint64_t) { return std::nan(""); }};
  CHECK_FALSE(run_check(nan, VerifyConfig{}).passed);
}
