#include <doctest.h>

#include <algorithm>

#include "bhdimer/verify.hpp"

using namespace bhdimer;

TEST_SUITE("verify") {
  TEST_CASE("all groups pass on the unmodified build") {
    const auto results = run_verification();
    CHECK(results.size() == 6);
    for (const auto& r : results) {
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.passed);
    }
  }

  TEST_CASE("a flipped H02 sign is caught by route equivalence") {
    VerifyOptions opts;
    opts.inject_h02_sign_error = true;
    const auto results = run_verification(opts);
    const auto it = std::find_if(results.begin(), results.end(),
                                 [](const auto& r) { return r.name == "route-equivalence"; });
    REQUIRE(it != results.end());
    CHECK_FALSE(it->passed);
    CHECK(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }) == 1);
  }
}
