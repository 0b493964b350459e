#pragma once

#include <cstdint>
#include <vector>

namespace goldbach {

/// Selects which primes a counting operation admits.
enum class Parity {
    All,     ///< every prime, including 2
    OddOnly, ///< odd primes only
};

/// Immutable primality table over [0, limit] with O(1) prefix counts.
///
/// Holds a bitmap plus two full prefix-count arrays: pi_all(x) = #{p <= x}
/// and pi_odd(x) = #{odd p <= x}. The arrays are stored unsampled because
/// pair-sum counting does one prefix lookup per prime.
///
/// Safe for concurrent reads once built; construction is single-writer.
class PrimeTable {
public:
    uint64_t limit() const { return limit_; }

    /// n must be <= limit(); 0 and 1 are not prime.
    bool is_prime(uint64_t n) const {
        return (bits_[n >> 6] >> (n & 63)) & 1u;
    }

    uint64_t pi_all(uint64_t x) const;
    uint64_t pi_odd(uint64_t x) const;

    /// Calls f(p) for every prime p in [lo, hi] (clamped to the table), ascending.
    template <class F>
    void for_each_prime(uint64_t lo, uint64_t hi, F&& f) const {
        if (hi > limit_) hi = limit_;
        for (uint64_t p = lo < 2 ? 2 : lo; p <= hi; ++p)
            if (is_prime(p)) f(p);
    }

private:
    friend PrimeTable build_prime_table(uint64_t, uint64_t);

    uint64_t limit_ = 0;
    std::vector<uint64_t> bits_;   // bitmap, bit n set iff n prime
    std::vector<uint32_t> pi_all_; // pi_all_[x] = #{p <= x}
    std::vector<uint32_t> pi_odd_; // pi_odd_[x] = #{odd p <= x}
};

inline constexpr uint64_t kDefaultSegmentSize = uint64_t{1} << 18;

/// Segmented sieve of Eratosthenes over [0, limit].
///
/// limit must be >= 2. segment_size is the number of entries sieved per
/// block; the default fits comfortably in L2.
PrimeTable build_prime_table(uint64_t limit, uint64_t segment_size = kDefaultSegmentSize);

/// Indicator of the odd primes: 1 iff n is an odd prime. n must be <= t.limit().
int chi_p(uint64_t n, const PrimeTable& t);

/// Prefix prime count at x under the given parity mode. x must be <= t.limit().
uint64_t pi_count(uint64_t x, Parity parity, const PrimeTable& t);

} // namespace goldbach
