#include <catch2/catch_amalgamated.hpp>

TEST_CASE("placeholder: metropolis suite pending") { REQUIRE(true); }
