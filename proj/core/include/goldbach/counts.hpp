#pragma once

#include <cstdint>
#include <vector>

#include "goldbach/primes.hpp"

namespace goldbach {

/// r[n] = R(2n) for 1 <= n <= M, where R(n) counts ordered pairs (p, q) of
/// odd primes with p + q = n. Exact nonnegative integers; R(2n) <= n.
struct RTable {
    uint64_t M = 0;
    std::vector<uint32_t> r; // index 0 unused; r[n] = R(2n)
};

/// Which of the two independent algorithms produced an A(M) value.
enum class SumMethod {
    DivisorAccumulation, ///< spread each R(2n) over the multiples of 2n up to 2M
    TelescopedQ,         ///< sum Q(floor(2M/n)) over n, sharing distinct-quotient blocks
};

struct SummatoryRecord {
    uint64_t M = 0;
    uint64_t value = 0; // A(M), exact
    SumMethod method = SumMethod::DivisorAccumulation;
};

/// R(n): ordered pairs of odd primes summing to n. Odd n gives 0 by
/// definition. One pass over odd primes p <= n-3 testing n-p.
uint64_t r_single(uint64_t n, const PrimeTable& t);

/// True iff R(n) >= 1, with early exit on the first representation found.
bool r_positive(uint64_t n, const PrimeTable& t);

/// Bulk table of R(2n) for n <= M. Requires 2M <= t.limit().
///
/// Above a size threshold the table is produced by exact self-convolution
/// of the odd-prime indicator (two-modulus number-theoretic transforms
/// recombined by remaindering); small M uses direct pair counting. Every
/// build spot-checks 200 indices against r_single and throws
/// consistency_error on any mismatch.
RTable r_table(uint64_t M, const PrimeTable& t);

/// Direct pair-counting construction of the same table; O(pi(2M)^2).
/// Kept public as the oracle for the transform path.
RTable r_table_direct(uint64_t M, const PrimeTable& t);

/// Q(x): ordered pairs of primes (restricted by parity mode) with p + q <= x.
/// Computed as a sum of prefix counts pi(x - p) over admitted p.
uint64_t q_count(uint64_t x, Parity parity, const PrimeTable& t);

/// a(m) = sum of R(d) over divisors d of m. Divisors found by trial
/// division to sqrt(m). a(m) = 0 for odd m.
uint64_t a_single(uint64_t m, const PrimeTable& t);

/// #{d | m : R(d) >= 1}; always <= a_single(m).
uint64_t a_distinct(uint64_t m, const PrimeTable& t);

/// A(M) = sum_{m<=M} a(2m) by the requested algorithm. Requires M >= 1 and
/// 2M <= t.limit(). The two methods agree exactly; the telescoped form is
/// the finite rearrangement A(M) = sum_n Q(floor(2M/n)) over odd-prime pairs.
SummatoryRecord summatory_a(uint64_t M, SumMethod method, const PrimeTable& t);

} // namespace goldbach
