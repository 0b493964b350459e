#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "goldbach/arith.hpp"
#include "oracles.hpp"

using namespace goldbach;

TEST_CASE("factorize canonical forms") {
    CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
    CHECK(factorize(1) == Factorization{});
    CHECK(factorize(97) == Factorization{{97, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<uint64_t> dist(1, 1000000);
    for (int i = 0; i < 200; ++i) {
        const uint64_t m = dist(rng);
        uint64_t prod = 1;
        uint64_t last = 0;
        for (const auto& pp : factorize(m)) {
            CHECK(pp.prime > last);
            CHECK(oracles::is_prime(pp.prime));
            last = pp.prime;
            for (uint32_t e = 0; e < pp.exponent; ++e) prod *= pp.prime;
        }
        CHECK(prod == m);
    }
}

TEST_CASE("tau and totient") {
    CHECK(tau(1) == 1);
    CHECK(tau(12) == 6);
    CHECK(tau(97) == 2);
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(97) == 96);
    CHECK(totient(200) == 80);
}

TEST_CASE("f values on small arguments") {
    CHECK(f_hl(15) == Rational(8, 3));
    CHECK(f_hl(8) == 1);
    CHECK(f_hl(3) == 2);
    CHECK(f_hl(1) == 1);
    CHECK_THROWS_AS(f_hl(0), std::invalid_argument);
}

TEST_CASE("f depends only on the odd squarefree kernel and is >= 1") {
    for (uint64_t n = 1; n <= 2000; ++n) {
        uint64_t kernel = 1;
        for (const auto& pp : factorize(n))
            if (pp.prime != 2) kernel *= pp.prime;
        CHECK(f_hl(n) == f_hl(kernel));
        CHECK(f_hl(n) >= 1);
    }
}

TEST_CASE("J values on small arguments") {
    CHECK(j_mult(1) == 1);
    CHECK(j_mult(2) == Rational(3, 2));
    CHECK(j_mult(12) == Rational(49, 12));
    CHECK_THROWS_AS(j_mult(0), std::invalid_argument);
}

TEST_CASE("J is at least 1 everywhere") {
    for (uint64_t m = 1; m <= 3000; ++m) CHECK(j_mult(m) >= 1);
}

TEST_CASE("f and J are multiplicative on coprime pairs") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<uint64_t> dist(1, 100000);
    int done = 0;
    while (done < 300) {
        const uint64_t m = dist(rng), n = dist(rng);
        if (std::gcd(m, n) != 1) continue;
        ++done;
        CHECK(f_hl(m * n) == f_hl(m) * f_hl(n));
        CHECK(j_mult(m * n) == j_mult(m) * j_mult(n));
    }
}

TEST_CASE("divisor-weighted sum identity sum d f(d) = m J(m)") {
    CHECK(divisor_weighted_sum(3) == 7);
    CHECK(divisor_weighted_sum(1) == 1);
    CHECK(divisor_weighted_sum(12) == 49);
    for (uint64_t m = 1; m <= 2000; ++m)
        CHECK(divisor_weighted_sum(m) == Rational(static_cast<unsigned long>(m)) * j_mult(m));
}

TEST_CASE("twin prime constant truncations") {
    const auto t = build_prime_table(200000);

    // single factor at p = 3
    const auto tiny = twin_prime_constant(3, t);
    CHECK(tiny.value == 0.75);
    // reference value of the constant, correct to ~20 digits
    const double c2_ref = 0.66016181584686957393;
    CHECK(std::abs(tiny.value - c2_ref) <= tiny.error_bound);

    const auto est = twin_prime_constant(100000, t);
    CHECK(std::abs(est.value - c2_ref) <= est.error_bound);
    CHECK(est.error_bound <= 1e-4);

    // independent long double recomputation
    const long double ld = oracles::c2_truncated(100000);
    CHECK(std::abs(est.value - static_cast<double>(ld)) < 1e-12);

    // monotone decreasing in the truncation limit
    const auto lo = twin_prime_constant(1000, t);
    const auto hi = twin_prime_constant(10000, t);
    CHECK(hi.value <= lo.value);

    CHECK_THROWS_AS(twin_prime_constant(200001, t), std::out_of_range);
}
