#include <doctest.h>
#include "padicrep/fp.hpp"
TEST_CASE("placeholder test_cli") { CHECK(padicrep::is_prime(5)); }
