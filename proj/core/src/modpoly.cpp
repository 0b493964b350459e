#include "modpoly.hpp"

#include <stdexcept>

namespace goldbach::detail {

namespace {

inline uint64_t fq_mul(uint64_t a, uint64_t b, uint64_t q) { return a * b % q; }

inline uint64_t fq_add(uint64_t a, uint64_t b, uint64_t q) {
    const uint64_t s = a + b;
    return s >= q ? s - q : s;
}

inline uint64_t fq_sub(uint64_t a, uint64_t b, uint64_t q) { return a >= b ? a - b : a + q - b; }

} // namespace

int64_t mp_deg(const ModPoly& a) { return static_cast<int64_t>(a.size()) - 1; }

void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

uint64_t fq_pow(uint64_t a, uint64_t e, uint64_t q) {
    uint64_t r = 1;
    a %= q;
    while (e) {
        if (e & 1) r = fq_mul(r, a, q);
        a = fq_mul(a, a, q);
        e >>= 1;
    }
    return r;
}

uint64_t fq_inv(uint64_t a, uint64_t q) { return fq_pow(a, q - 2, q); }

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, uint64_t q) {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    const unsigned __int128 worst =
        static_cast<unsigned __int128>(std::min(a.size(), b.size())) * q * q;
    if (worst < (static_cast<unsigned __int128>(1) << 63)) {
        // lazy accumulation: one reduction per output coefficient
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        }
        for (auto& c : out) c %= q;
    } else {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                out[i + j] = (out[i + j] + a[i] * b[j]) % q;
        }
    }
    mp_trim(out);
    return out;
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, uint64_t q) {
    ModPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] = fq_sub(out[i], b[i], q);
    mp_trim(out);
    return out;
}

ModPoly mp_rem(ModPoly a, const ModPoly& f, uint64_t q) {
    const int64_t df = mp_deg(f);
    if (df < 0 || f.back() != 1)
        throw std::invalid_argument("mp_rem: reducer must be monic and nonzero");
    const unsigned __int128 worst = static_cast<unsigned __int128>(a.size() + 1) * q * q;
    if (worst < (static_cast<unsigned __int128>(1) << 63)) {
        // lazy: slots stay below steps * q^2; reduce the pivot on read and
        // everything once at the end
        while (mp_deg(a) >= df) {
            const size_t i = a.size() - 1;
            const uint64_t c = a[i] % q;
            if (c != 0) {
                const size_t shift = i - static_cast<size_t>(df);
                for (size_t j = 0; j < f.size() - 1; ++j)
                    if (f[j]) a[shift + j] += c * (q - f[j]);
            }
            a.pop_back();
        }
        for (auto& c : a) c %= q;
    } else {
        while (mp_deg(a) >= df) {
            const size_t i = a.size() - 1;
            const uint64_t c = a[i];
            if (c != 0) {
                const size_t shift = i - static_cast<size_t>(df);
                for (size_t j = 0; j < f.size() - 1; ++j)
                    a[shift + j] = fq_sub(a[shift + j], fq_mul(c, f[j], q), q);
            }
            a.pop_back();
        }
    }
    mp_trim(a);
    return a;
}

std::pair<ModPoly, ModPoly> mp_divrem(const ModPoly& a, const ModPoly& b, uint64_t q) {
    const int64_t db = mp_deg(b);
    if (db < 0) throw std::invalid_argument("mp_divrem: division by zero");
    if (mp_deg(a) < db) return {{}, a};
    const uint64_t lead_inv = fq_inv(b.back(), q);
    ModPoly rem = a;
    ModPoly quot(a.size() - b.size() + 1, 0);
    for (int64_t i = mp_deg(a); i >= db; --i) {
        const uint64_t c = fq_mul(rem[static_cast<size_t>(i)], lead_inv, q);
        if (c == 0) continue;
        quot[static_cast<size_t>(i - db)] = c;
        for (size_t j = 0; j < b.size(); ++j) {
            auto& slot = rem[static_cast<size_t>(i - db) + j];
            slot = fq_sub(slot, fq_mul(c, b[j], q), q);
        }
    }
    mp_trim(rem);
    mp_trim(quot);
    return {quot, rem};
}

ModPoly mp_make_monic(ModPoly a, uint64_t q) {
    if (a.empty() || a.back() == 1) return a;
    const uint64_t inv = fq_inv(a.back(), q);
    for (auto& c : a) c = fq_mul(c, inv, q);
    return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, uint64_t q) {
    a = mp_make_monic(std::move(a), q);
    b = mp_make_monic(std::move(b), q);
    while (!b.empty()) {
        ModPoly r = mp_rem(std::move(a), b, q);
        a = std::move(b);
        b = mp_make_monic(std::move(r), q);
    }
    return a;
}

ModPoly mp_powmod(const ModPoly& base, unsigned __int128 e, const ModPoly& f, uint64_t q) {
    ModPoly result{1};
    ModPoly cur = mp_rem(base, f, q);
    while (e) {
        if (e & 1) result = mp_rem(mp_mul(result, cur, q), f, q);
        cur = mp_rem(mp_mul(cur, cur, q), f, q);
        e >>= 1;
    }
    return result;
}

ModPoly mp_derivative(const ModPoly& a, uint64_t q) {
    if (a.size() <= 1) return {};
    ModPoly out(a.size() - 1, 0);
    for (size_t i = 1; i < a.size(); ++i) out[i - 1] = fq_mul(a[i], i % q, q);
    mp_trim(out);
    return out;
}

std::vector<std::pair<uint32_t, uint32_t>> mp_ddf(ModPoly f, uint64_t q) {
    std::vector<std::pair<uint32_t, uint32_t>> pattern;
    ModPoly h{0, 1}; // x
    const ModPoly x = h;
    for (uint32_t i = 1; 2 * static_cast<int64_t>(i) <= mp_deg(f); ++i) {
        h = mp_powmod(h, q, f, q); // h = x^(q^i) mod f
        const ModPoly g = mp_gcd(mp_sub(h, x, q), f, q);
        if (mp_deg(g) > 0) {
            pattern.emplace_back(i, static_cast<uint32_t>(mp_deg(g) / i));
            f = mp_divrem(f, g, q).first;
            h = mp_rem(std::move(h), f, q);
        }
    }
    if (mp_deg(f) > 0) pattern.emplace_back(static_cast<uint32_t>(mp_deg(f)), 1);
    return pattern;
}

namespace {

// Cantor-Zassenhaus split of a product of degree-d irreducibles.
void edf_rec(ModPoly f, uint32_t d, uint64_t q, std::mt19937_64& rng,
             std::vector<ModPoly>& out) {
    if (mp_deg(f) == static_cast<int64_t>(d)) {
        out.push_back(std::move(f));
        return;
    }
    std::uniform_int_distribution<uint64_t> coeff(0, q - 1);
    for (;;) {
        ModPoly r(static_cast<size_t>(mp_deg(f)), 0);
        for (auto& c : r) c = coeff(rng);
        mp_trim(r);
        if (mp_deg(r) < 1) continue;
        unsigned __int128 e = 1;
        for (uint32_t i = 0; i < d; ++i) e *= q;
        e = (e - 1) / 2;
        ModPoly s = mp_powmod(r, e, f, q);
        if (!s.empty()) s[0] = fq_sub(s[0], 1, q);
        mp_trim(s);
        const ModPoly g = mp_gcd(s, f, q);
        if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(f)) {
            const ModPoly h = mp_divrem(f, g, q).first;
            edf_rec(g, d, q, rng, out);
            edf_rec(h, d, q, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<ModPoly> mp_factor_up_to(ModPoly f, uint64_t q, uint32_t max_degree,
                                     std::mt19937_64& rng) {
    std::vector<ModPoly> factors;
    ModPoly h{0, 1};
    const ModPoly x = h;
    for (uint32_t i = 1; i <= max_degree && 2 * static_cast<int64_t>(i) <= mp_deg(f); ++i) {
        h = mp_powmod(h, q, f, q);
        const ModPoly g = mp_gcd(mp_sub(h, x, q), f, q);
        if (mp_deg(g) > 0) {
            edf_rec(g, i, q, rng, factors);
            f = mp_divrem(f, g, q).first;
            h = mp_rem(std::move(h), f, q);
        }
    }
    if (mp_deg(f) > 0 && mp_deg(f) <= static_cast<int64_t>(max_degree))
        factors.push_back(std::move(f));
    return factors;
}

} // namespace goldbach::detail
