#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "qed/errors.hpp"

namespace qed::testing {

// Runs f and requires that it throws qed::error with the given code.
template <class F>
void expect_error(errc expected, F&& f) {
  bool threw = false;
  try {
    f();
  } catch (const error& e) {
    threw = true;
    INFO(e.what());
    REQUIRE(e.code() == expected);
  }
  REQUIRE(threw);
}

}  // namespace qed::testing
