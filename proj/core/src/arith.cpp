#include "goldbach/arith.hpp"

#include <stdexcept>
#include <string>

#include <mpfr.h>

namespace goldbach {

Factorization factorize(uint64_t m) {
    if (m < 1) throw std::invalid_argument("factorize: m must be >= 1");
    Factorization f;
    auto strip = [&](uint64_t p) {
        uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) f.push_back({p, e});
    };
    strip(2);
    for (uint64_t p = 3; p * p <= m; p += 2) strip(p);
    if (m > 1) f.push_back({m, 1});
    return f;
}

uint64_t tau(uint64_t m) {
    uint64_t d = 1;
    for (const auto& pp : factorize(m)) d *= pp.exponent + 1;
    return d;
}

uint64_t totient(uint64_t m) {
    uint64_t phi = 1;
    for (const auto& pp : factorize(m)) {
        uint64_t pk = pp.prime;
        for (uint32_t i = 1; i < pp.exponent; ++i) pk *= pp.prime;
        phi *= pk - pk / pp.prime;
    }
    return phi;
}

Rational f_hl(uint64_t n) {
    if (n < 1) throw std::invalid_argument("f_hl: n must be >= 1");
    Rational result(1);
    for (const auto& pp : factorize(n)) {
        if (pp.prime == 2) continue;
        result *= Rational(pp.prime - 1, pp.prime - 2);
    }
    return result;
}

Rational j_mult(uint64_t m) {
    if (m < 1) throw std::invalid_argument("j_mult: m must be >= 1");
    Rational result(1);
    for (const auto& pp : factorize(m)) {
        if (pp.prime == 2) {
            // 2 - 1/2^k
            mpz_class pow2 = 1;
            pow2 <<= pp.exponent;
            result *= Rational(2 * pow2 - 1, pow2);
        } else {
            // (1 - 2/p^(l+1)) / (1 - 2/p) = (p^(l+1) - 2) / (p^l (p - 2))
            mpz_class p(static_cast<unsigned long>(pp.prime));
            mpz_class p_l = 1;
            for (uint32_t i = 0; i < pp.exponent; ++i) p_l *= p;
            Rational factor(p_l * p - 2, p_l * (p - 2));
            factor.canonicalize();
            result *= factor;
        }
    }
    // the k = 0 branch of the 2-part is (2 - 1) = 1, the empty contribution
    return result;
}

Rational divisor_weighted_sum(uint64_t m) {
    if (m < 1) throw std::invalid_argument("divisor_weighted_sum: m must be >= 1");
    Rational total(0);
    for (uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        total += Rational(d) * f_hl(d);
        if (d != m / d) total += Rational(m / d) * f_hl(m / d);
    }
    return total;
}

ConstantEstimate twin_prime_constant(uint64_t truncation_limit, const PrimeTable& t) {
    if (truncation_limit > t.limit())
        throw std::out_of_range("twin_prime_constant: truncation limit exceeds sieve limit");

    constexpr mpfr_prec_t kPrec = 128;
    mpfr_t prod, tmp;
    mpfr_init2(prod, kPrec);
    mpfr_init2(tmp, kPrec);
    mpfr_set_ui(prod, 1, MPFR_RNDN);

    uint64_t factors = 0;
    t.for_each_prime(3, truncation_limit, [&](uint64_t p) {
        if ((p & 1) == 0) return;
        const uint64_t sq = (p - 1) * (p - 1);
        mpfr_set_ui(tmp, 1, MPFR_RNDN);
        mpfr_div_ui(tmp, tmp, sq, MPFR_RNDN);
        mpfr_ui_sub(tmp, 1, tmp, MPFR_RNDN);
        mpfr_mul(prod, prod, tmp, MPFR_RNDN);
        ++factors;
    });

    ConstantEstimate est;
    est.truncation_limit = truncation_limit;
    est.value = mpfr_get_d(prod, MPFR_RNDN);
    mpfr_clear(prod);
    mpfr_clear(tmp);

    // Tail: the true constant is value * prod_{p > P} (1 - 1/(p-1)^2), and
    // sum_{p > P} 1/(p-1)^2 <= sum_{n >= P} 1/n^2 <= 1/(P-1), so the
    // truncation error is at most value / (P-1). Rounding: at most 3 mpfr
    // operations per factor at 128-bit precision, plus one conversion to
    // double; 3 * factors * 2^-127 relative stays microscopic but is
    // accounted for anyway.
    const double tail = truncation_limit >= 3
                            ? est.value / static_cast<double>(truncation_limit - 1)
                            : 1.0; // no factor accumulated; C2 itself is < 1
    const double rounding =
        est.value * (3.0 * static_cast<double>(factors + 1) * 0x1p-127 + 0x1p-52);
    est.error_bound = tail + rounding;
    return est;
}

} // namespace goldbach
