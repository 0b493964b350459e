#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace goldbach::detail {

/// Dense polynomial over F_q, q an odd prime below 2^32. Coefficients lie
/// in [0, q); trailing zeros trimmed; the zero polynomial is empty.
using ModPoly = std::vector<uint64_t>;

int64_t mp_deg(const ModPoly& a);
void mp_trim(ModPoly& a);

uint64_t fq_pow(uint64_t a, uint64_t e, uint64_t q);
uint64_t fq_inv(uint64_t a, uint64_t q);

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, uint64_t q);
ModPoly mp_sub(const ModPoly& a, const ModPoly& b, uint64_t q);

/// Remainder of a by f; f must be monic and nonzero.
ModPoly mp_rem(ModPoly a, const ModPoly& f, uint64_t q);

/// Quotient and remainder; divisor need not be monic.
std::pair<ModPoly, ModPoly> mp_divrem(const ModPoly& a, const ModPoly& b, uint64_t q);

/// Monic gcd.
ModPoly mp_gcd(ModPoly a, ModPoly b, uint64_t q);

ModPoly mp_make_monic(ModPoly a, uint64_t q);

/// base^e mod f, with the exponent as a 128-bit value (covers q^i for the
/// equal-degree split exponents).
ModPoly mp_powmod(const ModPoly& base, unsigned __int128 e, const ModPoly& f, uint64_t q);

/// Formal derivative.
ModPoly mp_derivative(const ModPoly& a, uint64_t q);

/// Distinct-degree factorization of a monic squarefree f: list of
/// (degree, count) ascending by degree.
std::vector<std::pair<uint32_t, uint32_t>> mp_ddf(ModPoly f, uint64_t q);

/// Monic irreducible factors of degree <= max_degree of a monic squarefree
/// f, via distinct-degree then equal-degree splitting. Higher-degree
/// components are left alone, which keeps the split exponents q^d small.
std::vector<ModPoly> mp_factor_up_to(ModPoly f, uint64_t q, uint32_t max_degree,
                                     std::mt19937_64& rng);

} // namespace goldbach::detail
