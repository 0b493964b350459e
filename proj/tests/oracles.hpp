// Test-only brute-force oracles. These deliberately share no code with the
// library: primality by trial division, pair counts by double loops,
// divisor sums by definition.
#pragma once

#include <cstdint>
#include <vector>

namespace oracles {

inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline uint64_t pi(uint64_t x) {
    uint64_t c = 0;
    for (uint64_t n = 2; n <= x; ++n)
        if (is_prime(n)) ++c;
    return c;
}

inline uint64_t pi_odd(uint64_t x) {
    uint64_t c = 0;
    for (uint64_t n = 3; n <= x; n += 2)
        if (is_prime(n)) ++c;
    return c;
}

/// R(n): ordered pairs of odd primes p + q = n.
inline uint64_t r(uint64_t n) {
    if (n < 6 || (n & 1)) return 0;
    uint64_t c = 0;
    for (uint64_t p = 3; p + 3 <= n; p += 2)
        if (is_prime(p) && is_prime(n - p)) ++c;
    return c;
}

/// a(m) = sum of R(d) over d | m.
inline uint64_t a(uint64_t m) {
    uint64_t total = 0;
    for (uint64_t d = 1; d <= m; ++d)
        if (m % d == 0) total += r(d);
    return total;
}

inline uint64_t a_distinct(uint64_t m) {
    uint64_t total = 0;
    for (uint64_t d = 1; d <= m; ++d)
        if (m % d == 0 && r(d) >= 1) ++total;
    return total;
}

/// A(M) = sum_{m<=M} a(2m).
inline uint64_t summatory(uint64_t M) {
    uint64_t total = 0;
    for (uint64_t m = 1; m <= M; ++m) total += a(2 * m);
    return total;
}

/// Q(x) restricted to odd primes, by double loop.
inline uint64_t q_odd(uint64_t x) {
    uint64_t c = 0;
    for (uint64_t p = 3; p + 3 <= x; p += 2) {
        if (!is_prime(p)) continue;
        for (uint64_t q = 3; p + q <= x; q += 2)
            if (is_prime(q)) ++c;
    }
    return c;
}

/// Truncated twin-prime product in long double, independent of mpfr.
inline long double c2_truncated(uint64_t limit) {
    long double prod = 1.0L;
    for (uint64_t p = 3; p <= limit; p += 2) {
        if (!is_prime(p)) continue;
        const long double d = static_cast<long double>(p - 1);
        prod *= 1.0L - 1.0L / (d * d);
    }
    return prod;
}

} // namespace oracles
