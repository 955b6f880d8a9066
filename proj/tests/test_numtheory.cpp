#include <catch2/catch_amalgamated.hpp>

#include "constacode/numtheory.hpp"

using namespace constacode;

TEST_CASE("modular helpers") {
    REQUIRE(pow_mod(2, 10, 1000) == 24);
    REQUIRE(pow_mod(3, 6, 7) == 1);
    REQUIRE(inv_mod(3, 10) == 7);
    REQUIRE(inv_mod(1, 1) == 0);
    REQUIRE_THROWS_AS(inv_mod(2, 10), std::invalid_argument);
}

TEST_CASE("primality and factorization") {
    REQUIRE(is_prime_u64(2));
    REQUIRE(is_prime_u64(31));
    REQUIRE_FALSE(is_prime_u64(1));
    REQUIRE_FALSE(is_prime_u64(33));
    const auto f = factorize_u64(360);
    REQUIRE(f == std::vector<std::pair<u64, int>>{{2, 3}, {3, 2}, {5, 1}});
    REQUIRE(euler_phi(15) == 8);
    REQUIRE(euler_phi(31) == 30);
}

TEST_CASE("multiplicative order") {
    REQUIRE(mult_order_mod(2, 15) == 4);
    REQUIRE(mult_order_mod(4, 15) == 2);
    REQUIRE(mult_order_mod(2, 21) == 6);
    REQUIRE(mult_order_mod(2, 7) == 3);
    // agrees with the brute-force order on a grid
    for (u64 n : {5ull, 7ull, 11ull, 15ull, 21ull, 33ull}) {
        for (u64 a = 2; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            u64 o = 1, x = a % n;
            while (x != 1) {
                x = mul_mod(x, a, n);
                ++o;
            }
            REQUIRE(mult_order_mod(a, n) == o);
        }
    }
}

TEST_CASE("smallest primitive roots") {
    REQUIRE(smallest_primitive_root(5) == 2);
    REQUIRE(smallest_primitive_root(7) == 3);
    REQUIRE(smallest_primitive_root(11) == 2);
    REQUIRE(smallest_primitive_root(31) == 3);
}

TEST_CASE("linear congruence solver") {
    // 3k = 6 (mod 15): k = 2
    REQUIRE(solve_linear_congruence(3, 6, 15) == 2);
    // smallest solution is reported
    REQUIRE(solve_linear_congruence(2, 0, 4) == 0);
    REQUIRE_THROWS_AS(solve_linear_congruence(3, 1, 15), std::domain_error);
    // degenerate modulus-1 group
    REQUIRE(solve_linear_congruence(5, 0, 1) == 0);
    // a = 0 (mod n): solvable only for b = 0 (mod n)
    REQUIRE(solve_linear_congruence(15, 0, 15) == 0);
    REQUIRE_THROWS_AS(solve_linear_congruence(15, 3, 15), std::domain_error);
}
