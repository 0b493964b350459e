#include "goldbach/probe.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "goldbach/arith.hpp"
#include "modpoly.hpp"

namespace goldbach {

namespace detail {

namespace {

// ---- polynomials over Z/m for the Hensel lift, coefficients in [0, m) ----

using ZPoly = std::vector<mpz_class>;

void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int64_t z_deg(const ZPoly& a) { return static_cast<int64_t>(a.size()) - 1; }

ZPoly z_reduce(ZPoly a, const mpz_class& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    z_trim(a);
    return a;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return z_reduce(std::move(out), m);
}

ZPoly z_add(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return z_reduce(std::move(out), m);
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return z_reduce(std::move(out), m);
}

// Divide by monic h over Z/m.
std::pair<ZPoly, ZPoly> z_divrem_monic(const ZPoly& a, const ZPoly& h, const mpz_class& m) {
    const int64_t dh = z_deg(h);
    if (z_deg(a) < dh) return {{}, a};
    ZPoly rem = a;
    ZPoly quot(static_cast<size_t>(z_deg(a) - dh) + 1);
    for (int64_t i = z_deg(a); i >= dh; --i) {
        mpz_class c = rem[static_cast<size_t>(i)];
        if (c == 0) continue;
        quot[static_cast<size_t>(i - dh)] = c;
        rem[static_cast<size_t>(i)] = 0;
        for (int64_t j = 0; j < dh; ++j)
            mpz_submul(rem[static_cast<size_t>(i - dh + j)].get_mpz_t(), c.get_mpz_t(),
                       h[static_cast<size_t>(j)].get_mpz_t());
    }
    return {z_reduce(std::move(quot), m), z_reduce(std::move(rem), m)};
}

struct HenselState {
    mpz_class m;
    ZPoly f, g, h, s, t; // f = g*h (mod m), s*g + t*h = 1 (mod m); g, h monic
};

// One quadratic lift: everything that held mod m now holds mod m^2.
void hensel_step(HenselState& st) {
    const mpz_class m2 = st.m * st.m;
    const ZPoly e = z_sub(st.f, z_mul(st.g, st.h, m2), m2);
    auto [qq, r] = z_divrem_monic(z_mul(st.s, e, m2), st.h, m2);
    ZPoly u = z_add(z_mul(st.t, e, m2), z_mul(qq, st.g, m2), m2);
    // coefficients of u at or above deg g vanish mod m^2 by construction
    if (z_deg(u) >= z_deg(st.g))
        throw std::logic_error("hensel_step: factor increment degree overflow");
    st.g = z_add(st.g, u, m2);
    st.h = z_add(st.h, r, m2);

    ZPoly one{1};
    const ZPoly b =
        z_sub(z_add(z_mul(st.s, st.g, m2), z_mul(st.t, st.h, m2), m2), one, m2);
    auto [cc, dd] = z_divrem_monic(z_mul(st.s, b, m2), st.h, m2);
    st.s = z_sub(st.s, dd, m2);
    st.t = z_sub(st.t, z_add(z_mul(st.t, b, m2), z_mul(cc, st.g, m2), m2), m2);
    st.m = m2;
}

ZPoly from_modpoly(const ModPoly& a) {
    ZPoly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = static_cast<unsigned long>(a[i]);
    return out;
}

// Reduced Bezout pair for coprime monic g, h over F_q: s*g + t*h = 1 with
// deg s < deg h, deg t < deg g.
bool bezout_mod_q(const ModPoly& g, const ModPoly& h, uint64_t q, ModPoly& s, ModPoly& t) {
    // extended Euclid on (g, h)
    ModPoly r0 = g, r1 = h;
    ModPoly s0{1}, s1{};
    while (!r1.empty()) {
        auto [quot, rem] = mp_divrem(r0, r1, q);
        r0 = std::move(r1);
        r1 = std::move(rem);
        ModPoly s2 = mp_sub(s0, mp_mul(quot, s1, q), q);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (mp_deg(r0) != 0) return false; // not coprime
    const uint64_t inv = fq_inv(r0[0], q);
    for (auto& c : s0) c = c * inv % q;
    s = mp_rem(std::move(s0), h, q); // h monic
    // t = (1 - s*g) / h, exact over F_q
    ModPoly num = mp_sub(ModPoly{1}, mp_mul(s, g, q), q);
    auto [tq, tr] = mp_divrem(num, h, q);
    if (!tr.empty()) return false;
    t = std::move(tq);
    return true;
}

} // namespace

} // namespace detail

namespace {

using detail::ModPoly;

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// p mod q as a monic ModPoly, or empty if q kills the leading coefficient.
ModPoly reduce_poly(const IntPoly& p, uint64_t q) {
    ModPoly out(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        mpz_class r = p.coeffs()[i] % static_cast<unsigned long>(q);
        if (r < 0) r += static_cast<unsigned long>(q);
        out[i] = r.get_ui();
    }
    if (out.empty() || out.back() == 0) return {};
    return detail::mp_make_monic(std::move(out), q);
}

bool squarefree_mod(const ModPoly& f, uint64_t q) {
    const ModPoly d = detail::mp_derivative(f, q);
    if (d.empty()) return false;
    return detail::mp_deg(detail::mp_gcd(f, d, q)) == 0;
}

std::vector<std::pair<uint32_t, uint32_t>> pattern_mod(const IntPoly& p, uint64_t q) {
    ModPoly f = reduce_poly(p, q);
    return detail::mp_ddf(std::move(f), q);
}

// attain[s] = 1 iff some sub-multiset of the factor degrees sums to s
std::vector<char> attainable_sums(const std::vector<std::pair<uint32_t, uint32_t>>& pattern,
                                  size_t total_degree) {
    std::vector<char> attain(total_degree + 1, 0);
    attain[0] = 1;
    for (const auto& [d, count] : pattern)
        for (uint32_t c = 0; c < count; ++c)
            for (size_t s = total_degree; s >= d; --s)
                if (attain[s - d]) attain[s] = 1;
    return attain;
}

// Integer roots of a monic polynomial: divisors of the constant term.
std::optional<mpz_class> find_integer_root(const IntPoly& p) {
    const mpz_class& a0 = p.coeffs()[0];
    if (a0 == 0) return mpz_class(0);
    const mpz_class abs_a0 = abs(a0);
    if (!abs_a0.fits_ulong_p() || abs_a0 > 1000000000000ul) {
        // constant term too large to enumerate divisors; try small roots only
        for (long r = -64; r <= 64; ++r)
            if (r != 0 && poly_eval(p, r) == 0) return mpz_class(r);
        return std::nullopt;
    }
    const uint64_t abs0 = abs_a0.get_ui();
    std::vector<uint64_t> divisors{1};
    for (const auto& pp : factorize(abs0)) {
        const size_t n = divisors.size();
        uint64_t pe = 1;
        for (uint32_t e = 0; e < pp.exponent; ++e) {
            pe *= pp.prime;
            for (size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * pe);
        }
    }
    for (uint64_t d : divisors) {
        if (poly_eval(p, mpz_class(static_cast<unsigned long>(d))) == 0)
            return mpz_class(static_cast<unsigned long>(d));
        if (poly_eval(p, -mpz_class(static_cast<unsigned long>(d))) == 0)
            return -mpz_class(static_cast<unsigned long>(d));
    }
    return std::nullopt;
}

// Enumerate sub-multisets of factors (by index) whose degrees sum to target.
void enumerate_combinations(const std::vector<ModPoly>& factors, uint32_t target, size_t start,
                            std::vector<size_t>& current,
                            std::vector<std::vector<size_t>>& out, size_t cap) {
    if (target == 0) {
        if (!current.empty() && out.size() < cap) out.push_back(current);
        return;
    }
    if (out.size() >= cap) return;
    for (size_t i = start; i < factors.size(); ++i) {
        const auto d = static_cast<uint32_t>(detail::mp_deg(factors[i]));
        if (d > target) continue;
        current.push_back(i);
        enumerate_combinations(factors, target - d, i + 1, current, out, cap);
        current.pop_back();
    }
}

// Hensel-lift candidate factor g0 (mod q) of monic p and test exact division.
std::optional<IntPoly> lift_and_test(const IntPoly& p, const ModPoly& g0, uint64_t q) {
    using namespace detail;
    const ModPoly f0 = reduce_poly(p, q);
    auto [h0, r0] = mp_divrem(f0, g0, q);
    if (!r0.empty()) return std::nullopt;
    ModPoly s, t;
    if (!bezout_mod_q(g0, h0, q, s, t)) return std::nullopt;

    // Mignotte-style bound on coefficients of any factor of degree e:
    // 2^e * (|p|_2 + |lc p|); lift until the modulus exceeds twice that.
    mpz_class norm2 = 0;
    for (const auto& c : p.coeffs()) norm2 += c * c;
    mpz_class bound = sqrt(norm2) + 1 + 1; // |lc| = 1 for monic p
    bound <<= static_cast<unsigned long>(mp_deg(g0));
    const mpz_class target = 2 * bound + 1;

    HenselState st;
    st.m = static_cast<unsigned long>(q);
    st.f.assign(p.coeffs().begin(), p.coeffs().end()); // exact; reduced on use
    st.g = from_modpoly(g0);
    st.h = from_modpoly(h0);
    st.s = from_modpoly(s);
    st.t = from_modpoly(t);

    while (st.m < target) hensel_step(st);

    // symmetric representative of the lifted factor
    std::vector<mpz_class> coeffs(st.g.size());
    for (size_t i = 0; i < st.g.size(); ++i) {
        mpz_class c = st.g[i];
        if (2 * c > st.m) c -= st.m;
        coeffs[i] = std::move(c);
    }
    IntPoly candidate(std::move(coeffs));
    if (candidate.is_zero() || !candidate.is_monic()) return std::nullopt;
    auto [quot, rem] = poly_divrem(p, candidate);
    if (!rem.is_zero()) return std::nullopt;
    if (quot.degree() < 1) return std::nullopt;
    return candidate;
}

} // namespace

std::vector<uint64_t> default_probe_primes(const IntPoly& p, size_t count) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("default_probe_primes: need a nonzero poly of degree >= 1");
    std::vector<uint64_t> primes;
    const uint64_t start = static_cast<uint64_t>(p.degree()) + 1;
    for (uint64_t q = start < 3 ? 3 : start; primes.size() < count && q < start + 1000000; ++q) {
        if (!is_prime_u64(q) || (q & 1) == 0) continue;
        const ModPoly f = reduce_poly(p, q);
        if (f.empty() || !squarefree_mod(f, q)) continue;
        primes.push_back(q);
    }
    return primes;
}

ProbeResult irreducibility_probe(const IntPoly& p, const std::vector<uint64_t>& probe_primes,
                                 uint32_t degree_budget) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("irreducibility_probe: need a nonzero poly of degree >= 1");
    if (probe_primes.empty())
        throw std::invalid_argument("irreducibility_probe: prime budget must be nonempty");

    ProbeResult result;
    const auto total_degree = static_cast<size_t>(p.degree());

    // content check: a nonunit constant divisor is already a factor in Z[z]
    mpz_class content = 0;
    for (const auto& c : p.coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1) {
        result.verdict = Verdict::Reducible;
        result.factor = IntPoly::constant(content);
        return result;
    }

    // primitive of degree 1 is irreducible outright
    if (p.degree() == 1) {
        result.verdict = Verdict::Irreducible;
        return result;
    }

    // integer-root scan for monic inputs covers every linear factor
    if (p.is_monic()) {
        if (auto root = find_integer_root(p)) {
            result.verdict = Verdict::Reducible;
            result.factor = IntPoly({-*root, 1});
            return result;
        }
    }

    std::vector<char> intersection(total_degree + 1, 1);
    std::vector<uint64_t> usable;
    for (uint64_t q : probe_primes) {
        if (q < 3 || !is_prime_u64(q) || (q & 1) == 0) continue;
        const ModPoly f = reduce_poly(p, q);
        if (f.empty() || static_cast<size_t>(detail::mp_deg(f)) != total_degree) continue;
        if (!squarefree_mod(f, q)) continue;

        DegreePattern pat;
        pat.prime = q;
        pat.factors = detail::mp_ddf(f, q);
        const auto attain = attainable_sums(pat.factors, total_degree);
        for (size_t s = 0; s <= total_degree; ++s)
            intersection[s] = intersection[s] && attain[s];
        result.patterns.push_back(std::move(pat));
        usable.push_back(q);

        bool any_proper = false;
        for (size_t s = 1; s < total_degree; ++s) any_proper |= intersection[s] != 0;
        if (!any_proper) {
            result.verdict = Verdict::Irreducible;
            return result;
        }
    }

    if (usable.empty()) {
        result.verdict = Verdict::Unknown;
        return result;
    }

    // candidate degrees small enough to lift
    if (p.is_monic()) {
        constexpr size_t kMaxCandidates = 32;
        for (uint32_t e = 1; e <= degree_budget && e < total_degree; ++e) {
            if (!intersection[e]) continue;
            for (uint64_t q : usable) {
                std::mt19937_64 rng(0x5bd1e995u ^ q ^ (uint64_t{e} << 32));
                ModPoly f = reduce_poly(p, q);
                const auto factors = detail::mp_factor_up_to(std::move(f), q, degree_budget, rng);
                std::vector<std::vector<size_t>> combos;
                std::vector<size_t> current;
                enumerate_combinations(factors, e, 0, current, combos, kMaxCandidates);
                for (const auto& combo : combos) {
                    ModPoly g0{1};
                    for (size_t idx : combo) g0 = detail::mp_mul(g0, factors[idx], q);
                    if (auto factor = lift_and_test(p, g0, q)) {
                        result.verdict = Verdict::Reducible;
                        result.factor = std::move(*factor);
                        return result;
                    }
                }
            }
        }
    }

    result.verdict = Verdict::Unknown;
    return result;
}

bool verify_probe(const IntPoly& p, const ProbeResult& result) {
    switch (result.verdict) {
    case Verdict::Unknown:
        return true;
    case Verdict::Reducible: {
        if (!result.factor) return false;
        const IntPoly& f = *result.factor;
        if (f.is_zero()) return false;
        if (f.degree() == 0) {
            const mpz_class& c = f.coeffs()[0];
            if (c == 0 || c == 1 || c == -1) return false;
            for (const auto& coeff : p.coeffs())
                if (!mpz_divisible_p(coeff.get_mpz_t(), c.get_mpz_t())) return false;
            return true;
        }
        if (f.degree() >= p.degree() || !f.is_monic()) return false;
        auto [quot, rem] = poly_divrem(p, f);
        if (!rem.is_zero()) return false;
        return poly_mul(quot, f) == p; // re-multiplication closes the loop
    }
    case Verdict::Irreducible: {
        if (result.patterns.empty()) return p.degree() == 1;
        const auto total_degree = static_cast<size_t>(p.degree());
        std::vector<char> intersection(total_degree + 1, 1);
        for (const auto& pat : result.patterns) {
            if (pattern_mod(p, pat.prime) != pat.factors) return false;
            const auto attain = attainable_sums(pat.factors, total_degree);
            for (size_t s = 0; s <= total_degree; ++s)
                intersection[s] = intersection[s] && attain[s];
        }
        for (size_t s = 1; s < total_degree; ++s)
            if (intersection[s]) return false;
        return true;
    }
    }
    return false;
}

} // namespace goldbach
