// Full verification suite: one PASS/FAIL line per criterion A1-A12.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "wrz/acceptance.hpp"

TEST_CASE("acceptance criteria A1-A12") {
  const auto results = wrz::run_acceptance(/*full=*/true);
  wrz::print_acceptance(results, std::cout);
  REQUIRE(results.size() == 12);
  for (const auto& r : results) {
    INFO(r.id, ": ", r.summary);
    CHECK(r.pass);
  }
}
