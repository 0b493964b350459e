#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "goldbach/primes.hpp"

namespace goldbach {

/// Exact reduced fraction with positive denominator. mpq_class keeps values
/// canonical, which is exactly the invariant the identity checks need.
using Rational = mpq_class;

struct PrimePower {
    uint64_t prime = 0;
    uint32_t exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization in increasing prime order; empty for m = 1.
using Factorization = std::vector<PrimePower>;

/// Truncated Euler product for the twin primes constant, with a proven
/// bound on |value - C2| (tail estimate plus rounding slack).
struct ConstantEstimate {
    double value = 0.0;
    double error_bound = 0.0;
    uint64_t truncation_limit = 0;
};

/// Trial division; m must be >= 1.
Factorization factorize(uint64_t m);

/// tau(m): number of divisors, from the factorization.
uint64_t tau(uint64_t m);

/// Euler totient, from the factorization.
uint64_t totient(uint64_t m);

/// f(n) = prod over odd primes p | n of (p-1)/(p-2). f(1) = f(2^k) = 1.
Rational f_hl(uint64_t n);

/// J(m): with 2^k exactly dividing m,
///   J(m) = (2 - 1/2^k) * prod over odd p^l || m of (1 - 2/p^(l+1)) / (1 - 2/p).
/// Multiplicative; J(m) >= 1 for every m >= 1.
Rational j_mult(uint64_t m);

/// sum over d | m of d * f(d), by direct divisor enumeration. Equals
/// m * J(m) exactly; computed independently of j_mult so the identity is a
/// real cross-check.
Rational divisor_weighted_sum(uint64_t m);

/// Product of (1 - 1/(p-1)^2) over odd primes p <= truncation_limit, carried
/// in 128-bit precision. The reported error bound combines the elementary
/// tail estimate sum_{p > P} 1/(p-1)^2 <= 1/(P-1) with the accumulated
/// rounding slack, so |value - C2| <= error_bound is a theorem, not a hope.
ConstantEstimate twin_prime_constant(uint64_t truncation_limit, const PrimeTable& t);

} // namespace goldbach
