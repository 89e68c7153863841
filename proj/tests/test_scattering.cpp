#include <catch2/catch_amalgamated.hpp>

TEST_CASE("placeholder: scattering suite pending") { SUCCEED(); }
