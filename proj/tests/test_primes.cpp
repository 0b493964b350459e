#include <doctest.h>

#include <stdexcept>

#include "goldbach/primes.hpp"
#include "oracles.hpp"

using namespace goldbach;

TEST_CASE("small tables match hand counts") {
    const auto t10 = build_prime_table(10);
    CHECK(t10.pi_all(10) == 4);
    CHECK(t10.pi_odd(10) == 3);

    const auto t2 = build_prime_table(2);
    CHECK(t2.pi_all(2) == 1);
    CHECK(t2.pi_odd(2) == 0);
}

TEST_CASE("construction rejects bad limits") {
    CHECK_THROWS_AS(build_prime_table(0), std::invalid_argument);
    CHECK_THROWS_AS(build_prime_table(1), std::invalid_argument);
}

TEST_CASE("chi_p recognizes exactly the odd primes") {
    const auto t = build_prime_table(100);
    CHECK(chi_p(2, t) == 0);
    CHECK(chi_p(3, t) == 1);
    CHECK(chi_p(9, t) == 0);
    CHECK(chi_p(0, t) == 0);
    CHECK(chi_p(1, t) == 0);
    CHECK_THROWS_AS(chi_p(101, t), std::out_of_range);

    for (uint64_t n = 0; n <= 100; ++n)
        CHECK(chi_p(n, t) == ((n % 2 == 1 && oracles::is_prime(n)) ? 1 : 0));
}

TEST_CASE("pi_count matches both parities") {
    const auto t = build_prime_table(50);
    CHECK(pi_count(10, Parity::All, t) == 4);
    CHECK(pi_count(10, Parity::OddOnly, t) == 3);
    CHECK(pi_count(1, Parity::All, t) == 0);
    CHECK_THROWS_AS(pi_count(51, Parity::All, t), std::out_of_range);
}

TEST_CASE("prefix counts satisfy the step relation and parity offset") {
    const auto t = build_prime_table(2000);
    for (uint64_t x = 1; x <= 2000; ++x) {
        CHECK(t.pi_all(x) == t.pi_all(x - 1) + (t.is_prime(x) ? 1 : 0));
        if (x >= 2) CHECK(t.pi_all(x) - t.pi_odd(x) == 1);
    }
    CHECK(t.pi_all(0) == 0);
    CHECK(t.pi_odd(1) == 0);
}

TEST_CASE("agreement with the trial-division oracle up to 10^4") {
    const auto t = build_prime_table(10000);
    uint64_t all = 0, odd = 0;
    for (uint64_t n = 0; n <= 10000; ++n) {
        const bool p = oracles::is_prime(n);
        CHECK(t.is_prime(n) == p);
        if (p) {
            ++all;
            if (n & 1) ++odd;
        }
        CHECK(t.pi_all(n) == all);
        CHECK(t.pi_odd(n) == odd);
    }
}

TEST_CASE("pi(10^6) = 78498, cross-checked against the naive counter") {
    const auto t = build_prime_table(1000000);
    CHECK(t.pi_all(1000000) == 78498);
    CHECK(oracles::pi(1000000) == 78498);
}

TEST_CASE("rebuilding with a larger limit extends the prefix") {
    const auto small = build_prime_table(1000);
    const auto large = build_prime_table(5000);
    for (uint64_t x = 0; x <= 1000; ++x) {
        CHECK(small.pi_all(x) == large.pi_all(x));
        CHECK(small.pi_odd(x) == large.pi_odd(x));
    }
}

TEST_CASE("segment size does not change the table") {
    const auto a = build_prime_table(30000, 64);
    const auto b = build_prime_table(30000, 997);
    const auto c = build_prime_table(30000);
    for (uint64_t x = 0; x <= 30000; ++x) {
        CHECK(a.pi_all(x) == c.pi_all(x));
        CHECK(b.pi_all(x) == c.pi_all(x));
    }
}
