#include <doctest.h>
#include "padicrep/fp.hpp"
TEST_CASE("placeholder test_theorems") { CHECK(padicrep::is_prime(5)); }
