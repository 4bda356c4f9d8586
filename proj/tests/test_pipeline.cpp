#include <catch2/catch_amalgamated.hpp>
#include "schub/schub.hpp"
TEST_CASE("placeholder test_pipeline") { REQUIRE(true); }
