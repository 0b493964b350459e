#include "goldbach/counts.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

#include "goldbach/errors.hpp"
#include "ntt.hpp"

namespace goldbach {

namespace {

// Direct pair counting is both the small-M path and the oracle for the
// transform path.
constexpr uint64_t kConvolutionThreshold = 4096;

unsigned worker_threads() {
    if (const char* env = std::getenv("GOLDBACH_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 2;
}

void check_range(uint64_t needed, const PrimeTable& t, const char* who) {
    if (needed > t.limit())
        throw std::out_of_range(std::string(who) + ": argument needs sieve limit >= " +
                                std::to_string(needed) + ", table has " +
                                std::to_string(t.limit()));
}

void spot_check(const RTable& rt, const PrimeTable& t) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ rt.M);
    std::uniform_int_distribution<uint64_t> dist(1, rt.M);
    for (int i = 0; i < 200; ++i) {
        const uint64_t n = dist(rng);
        if (rt.r[n] != r_single(2 * n, t))
            throw consistency_error("r_table: convolution disagrees with r_single at n=" +
                                    std::to_string(n));
    }
}

} // namespace

uint64_t r_single(uint64_t n, const PrimeTable& t) {
    check_range(n, t, "r_single");
    if ((n & 1) || n < 6) return 0;
    uint64_t count = 0;
    for (uint64_t p = 3; p <= n - 3; p += 2)
        if (t.is_prime(p) && t.is_prime(n - p)) ++count;
    return count;
}

bool r_positive(uint64_t n, const PrimeTable& t) {
    check_range(n, t, "r_positive");
    if ((n & 1) || n < 6) return false;
    for (uint64_t p = 3; p <= n / 2; p += 2)
        if (t.is_prime(p) && t.is_prime(n - p)) return true;
    return false;
}

RTable r_table_direct(uint64_t M, const PrimeTable& t) {
    if (M < 1) throw std::invalid_argument("r_table_direct: M must be >= 1");
    check_range(2 * M, t, "r_table_direct");

    if (2 * M < 6) {
        RTable rt;
        rt.M = M;
        rt.r.assign(M + 1, 0);
        return rt;
    }

    std::vector<uint32_t> odd_primes;
    t.for_each_prime(3, 2 * M - 3, [&](uint64_t p) {
        if (p & 1) odd_primes.push_back(static_cast<uint32_t>(p));
    });

    RTable rt;
    rt.M = M;
    rt.r.assign(M + 1, 0);
    for (size_t i = 0; i < odd_primes.size(); ++i) {
        const uint64_t p = odd_primes[i];
        if (2 * p <= 2 * M) rt.r[p] += 1; // (p, p)
        for (size_t j = i + 1; j < odd_primes.size(); ++j) {
            const uint64_t s = p + odd_primes[j];
            if (s > 2 * M) break;
            rt.r[s / 2] += 2; // (p, q) and (q, p)
        }
    }
    return rt;
}

RTable r_table(uint64_t M, const PrimeTable& t) {
    if (M < 1) throw std::invalid_argument("r_table: M must be >= 1");
    check_range(2 * M, t, "r_table");

    RTable rt;
    if (M <= kConvolutionThreshold) {
        rt = r_table_direct(M, t);
    } else {
        // Index compression: odd p = 2i+1 maps to i, so p + q = 2(i+j)+2 and
        // R(2n) is the self-convolution of the indicator at s = n-1.
        std::vector<uint8_t> ind(M, 0);
        for (uint64_t i = 1; i < M; ++i) ind[i] = static_cast<uint8_t>(t.is_prime(2 * i + 1));
        const auto conv = detail::convolve_square_01(ind, M, worker_threads());
        rt.M = M;
        rt.r.assign(M + 1, 0);
        for (uint64_t n = 1; n <= M; ++n) rt.r[n] = static_cast<uint32_t>(conv[n - 1]);
    }
    spot_check(rt, t);
    return rt;
}

uint64_t q_count(uint64_t x, Parity parity, const PrimeTable& t) {
    check_range(x, t, "q_count");
    uint64_t total = 0;
    if (parity == Parity::All) {
        if (x < 4) return 0;
        t.for_each_prime(2, x - 2, [&](uint64_t p) { total += t.pi_all(x - p); });
    } else {
        if (x < 6) return 0;
        t.for_each_prime(3, x - 3, [&](uint64_t p) {
            if (p & 1) total += t.pi_odd(x - p);
        });
    }
    return total;
}

uint64_t a_single(uint64_t m, const PrimeTable& t) {
    if (m < 1) throw std::invalid_argument("a_single: m must be >= 1");
    check_range(m, t, "a_single");
    uint64_t total = 0;
    for (uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        total += r_single(d, t);
        if (d != m / d) total += r_single(m / d, t);
    }
    return total;
}

uint64_t a_distinct(uint64_t m, const PrimeTable& t) {
    if (m < 1) throw std::invalid_argument("a_distinct: m must be >= 1");
    check_range(m, t, "a_distinct");
    uint64_t total = 0;
    for (uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        total += r_positive(d, t) ? 1 : 0;
        if (d != m / d) total += r_positive(m / d, t) ? 1 : 0;
    }
    return total;
}

SummatoryRecord summatory_a(uint64_t M, SumMethod method, const PrimeTable& t) {
    if (M < 1) throw std::invalid_argument("summatory_a: M must be >= 1");
    check_range(2 * M, t, "summatory_a");

    SummatoryRecord rec;
    rec.M = M;
    rec.method = method;

    if (method == SumMethod::DivisorAccumulation) {
        const RTable rt = r_table(M, t);
        uint64_t acc = 0;
        for (uint64_t n = 1; n <= M; ++n) {
            const uint32_t rn = rt.r[n];
            if (rn == 0) continue;
            // one contribution per multiple of 2n up to 2M
            for (uint64_t k = n; k <= M; k += n) acc += rn;
        }
        rec.value = acc;
    } else {
        // A(M) = sum over n of Q(floor(2M/n)) restricted to odd-prime pairs;
        // floor(2M/n) is constant on blocks, so each distinct quotient is
        // evaluated once.
        const uint64_t x = 2 * M;
        const uint64_t n_max = M / 2;
        uint64_t acc = 0;
        for (uint64_t n = 1; n <= n_max;) {
            const uint64_t v = x / n;
            const uint64_t n_end = std::min(n_max, x / v);
            acc += q_count(v, Parity::OddOnly, t) * (n_end - n + 1);
            n = n_end + 1;
        }
        rec.value = acc;
    }
    return rec;
}

} // namespace goldbach
