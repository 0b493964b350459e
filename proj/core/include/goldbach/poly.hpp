#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "goldbach/primes.hpp"

namespace goldbach {

/// Dense polynomial with exact integer coefficients, index = degree.
/// Trailing zeros are always trimmed: the zero polynomial has an empty
/// coefficient array and degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly constant(mpz_class c);
    static IntPoly monomial(uint64_t degree, mpz_class c = 1);

    bool is_zero() const { return c_.empty(); }
    int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }
    size_t size() const { return c_.size(); }

    /// Coefficient of z^i; zero beyond the degree.
    const mpz_class& operator[](size_t i) const;

    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<mpz_class> c_;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);

/// Exact product; schoolbook below a size threshold, Karatsuba splitting
/// above it.
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Exact division with remainder: a = q*b + r, deg r < deg b. The divisor
/// must be monic (every divisor this project needs is a cyclotomic);
/// anything else throws unsupported_divisor, and b = 0 throws
/// invalid_argument.
std::pair<IntPoly, IntPoly> poly_divrem(const IntPoly& a, const IntPoly& b);

/// Horner evaluation at an exact integer point.
mpz_class poly_eval(const IntPoly& p, const mpz_class& x);

/// k-th cyclotomic polynomial by iterated exact division of z^k - 1 by the
/// cyclotomics of the proper divisors of k. Memoized; concurrent reads are
/// fine, insertion is exclusive.
IntPoly cyclotomic(uint64_t k);

/// F_N(z) = sum_{k=0}^{N-1} ( sum_{n<N} chi(n) z^{kn} )^2 over the odd-prime
/// indicator chi, built by direct coefficient counting: the k = 0 summand
/// contributes pi_odd(N-1)^2 to the constant term, and each ordered pair of
/// odd primes (p, q) <= N-1 adds 1 at degree k(p+q) for k >= 1. No
/// polynomial squaring is ever performed.
IntPoly build_fn(uint64_t N, const PrimeTable& t);

/// Coefficient of z^m (zero beyond the degree). For N >= m this equals a(m).
mpz_class coefficient_of(const IntPoly& p, uint64_t m);

struct EquivCheck {
    bool divides = false;   // Phi_N | F_N, exact division
    bool r_is_zero = false; // R(N) == 0
    bool agree = false;     // the two must match; false would be a bug
};

/// The divisibility <-> no-representation equivalence at a single N.
/// F_N = 0 (N <= 3) counts as divisible by convention.
EquivCheck goldbach_equiv_check(uint64_t N, const PrimeTable& t);

/// Exact quotient F_{2N} / Phi_{4N}. The remainder is asserted zero: a
/// nonzero remainder is impossible for correct code and raises
/// consistency_error.
IntPoly quotient_f2n(uint64_t N, const PrimeTable& t);

/// Sparse text form: "deg:coeff" pairs, ascending degree, decimal
/// coefficients, space separated. The zero polynomial serializes to "".
std::string to_sparse_string(const IntPoly& p);
IntPoly parse_sparse_string(std::string_view text);

} // namespace goldbach
