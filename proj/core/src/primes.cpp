#include "goldbach/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace goldbach {

namespace {

// Odd primes <= n by a plain sieve; used only for the base primes up to sqrt(limit).
std::vector<uint64_t> small_primes(uint64_t n) {
    std::vector<uint8_t> composite(n + 1, 0);
    std::vector<uint64_t> primes;
    for (uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
    }
    return primes;
}

} // namespace

uint64_t PrimeTable::pi_all(uint64_t x) const {
    if (x > limit_)
        throw std::out_of_range("pi_all: x=" + std::to_string(x) + " exceeds table limit " +
                                std::to_string(limit_));
    return pi_all_[x];
}

uint64_t PrimeTable::pi_odd(uint64_t x) const {
    if (x > limit_)
        throw std::out_of_range("pi_odd: x=" + std::to_string(x) + " exceeds table limit " +
                                std::to_string(limit_));
    return pi_odd_[x];
}

PrimeTable build_prime_table(uint64_t limit, uint64_t segment_size) {
    if (limit < 2) throw std::invalid_argument("build_prime_table: limit must be >= 2");
    if (limit > (uint64_t{1} << 32))
        throw std::invalid_argument("build_prime_table: limit above 2^32 is unsupported");
    if (segment_size < 64) segment_size = 64;

    PrimeTable t;
    t.limit_ = limit;
    t.bits_.assign((limit >> 6) + 1, ~uint64_t{0});

    auto clear_bit = [&](uint64_t n) { t.bits_[n >> 6] &= ~(uint64_t{1} << (n & 63)); };

    clear_bit(0);
    clear_bit(1);

    const uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    const auto base = small_primes(std::min(root, limit));

    // Sieve [lo, hi) one segment at a time; marks land directly in the bitmap.
    for (uint64_t lo = 2; lo <= limit; lo += segment_size) {
        const uint64_t hi = std::min(limit + 1, lo + segment_size);
        for (uint64_t p : base) {
            uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            if (start >= hi) continue;
            for (uint64_t j = start; j < hi; j += p) clear_bit(j);
        }
    }

    // Trailing garbage bits beyond `limit` in the last word.
    if (((limit + 1) & 63) != 0) {
        const uint64_t keep = (uint64_t{1} << ((limit + 1) & 63)) - 1;
        t.bits_.back() &= keep;
    }

    t.pi_all_.resize(limit + 1);
    t.pi_odd_.resize(limit + 1);
    uint32_t all = 0, odd = 0;
    for (uint64_t n = 0; n <= limit; ++n) {
        if (t.is_prime(n)) {
            ++all;
            if (n & 1) ++odd;
        }
        t.pi_all_[n] = all;
        t.pi_odd_[n] = odd;
    }
    return t;
}

int chi_p(uint64_t n, const PrimeTable& t) {
    if (n > t.limit())
        throw std::out_of_range("chi_p: n=" + std::to_string(n) + " exceeds table limit");
    return (n & 1) && t.is_prime(n) ? 1 : 0;
}

uint64_t pi_count(uint64_t x, Parity parity, const PrimeTable& t) {
    return parity == Parity::All ? t.pi_all(x) : t.pi_odd(x);
}

} // namespace goldbach
