#include <catch2/catch_amalgamated.hpp>

TEST_CASE("placeholder: diameter suite pending") { REQUIRE(true); }
