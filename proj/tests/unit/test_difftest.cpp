#include <doctest.h>

#include "sde/difftest.hpp"
#include "sde/errors.hpp"

using namespace sde;

TEST_CASE("zero trials is a vacuous pass") {
  const auto rep = run_difftest(SystemKind::A, 0, 10, 7);
  CHECK(rep.all_passed());
  CHECK(rep.passed == 0);
  CHECK(rep.skipped == 0);
  CHECK_FALSE(rep.first_failed_trial.has_value());
}

TEST_CASE("report does not depend on the thread count") {
  for (SystemKind sys : {SystemKind::A, SystemKind::B}) {
    const auto one = run_difftest(sys, 24, 16, 3, 1);
    const auto four = run_difftest(sys, 24, 16, 3, 4);
    CHECK(one.passed == four.passed);
    CHECK(one.skipped == four.skipped);
    CHECK(one.per_stratum == four.per_stratum);
    CHECK(one.per_check.size() == four.per_check.size());
    CHECK(one.all_passed());
    CHECK(one.passed + one.skipped == 24);
  }
}

TEST_CASE("every stratum is visited in order") {
  const auto& st = strata(SystemKind::A);
  for (std::size_t i = 0; i < st.size(); ++i) {
    const TrialResult r = run_trial(SystemKind::A, i, 100 + i, 20);
    CHECK(r.stratum == st[i]);
    CHECK(r.passed());
    CHECK(r.checks.count("product") == 1);
  }
  const TrialResult b = run_trial(SystemKind::B, 3, 5, 20);
  CHECK(b.checks.count("AllOnes") == 1);
  CHECK(b.passed());
}
