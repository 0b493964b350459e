#include "goldbach/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "goldbach/counts.hpp"
#include "goldbach/errors.hpp"

namespace goldbach {

namespace {

const mpz_class kZero = 0;
constexpr size_t kSchoolbookThreshold = 32;

using Coeffs = std::vector<mpz_class>;

Coeffs school_mul(const Coeffs& a, const Coeffs& b) {
    Coeffs out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

Coeffs add_vec(const Coeffs& a, const Coeffs& b) {
    Coeffs out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Coeffs mul_rec(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= kSchoolbookThreshold) return school_mul(a, b);

    const size_t m = (std::max(a.size(), b.size()) + 1) / 2;
    const Coeffs a0(a.begin(), a.begin() + std::min(m, a.size()));
    const Coeffs a1(a.begin() + std::min(m, a.size()), a.end());
    const Coeffs b0(b.begin(), b.begin() + std::min(m, b.size()));
    const Coeffs b1(b.begin() + std::min(m, b.size()), b.end());

    Coeffs low = mul_rec(a0, b0);
    Coeffs high = (!a1.empty() && !b1.empty()) ? mul_rec(a1, b1) : Coeffs{};
    Coeffs mid = mul_rec(add_vec(a0, a1), add_vec(b0, b1));
    for (size_t i = 0; i < low.size(); ++i) mid[i] -= low[i];
    for (size_t i = 0; i < high.size(); ++i) mid[i] -= high[i];

    Coeffs out(a.size() + b.size() - 1);
    for (size_t i = 0; i < low.size(); ++i) out[i] += low[i];
    for (size_t i = 0; i < mid.size(); ++i)
        if (mid[i] != 0) out[m + i] += mid[i];
    for (size_t i = 0; i < high.size(); ++i) out[2 * m + i] += high[i];
    return out;
}

} // namespace

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(mpz_class c) {
    IntPoly p;
    p.c_.push_back(std::move(c));
    p.trim();
    return p;
}

IntPoly IntPoly::monomial(uint64_t degree, mpz_class c) {
    IntPoly p;
    if (c != 0) {
        p.c_.resize(degree + 1);
        p.c_[degree] = std::move(c);
    }
    return p;
}

const mpz_class& IntPoly::operator[](size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    return IntPoly(add_vec(a.coeffs(), b.coeffs()));
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    Coeffs out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a.coeffs()[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b.coeffs()[i];
    return IntPoly(std::move(out));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    return IntPoly(mul_rec(a.coeffs(), b.coeffs()));
}

std::pair<IntPoly, IntPoly> poly_divrem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divrem: division by zero polynomial");
    if (!b.is_monic())
        throw unsupported_divisor("poly_divrem: only monic divisors are supported");

    const int64_t da = a.degree(), db = b.degree();
    if (da < db) return {IntPoly{}, a};

    Coeffs rem = a.coeffs();
    Coeffs quot(static_cast<size_t>(da - db) + 1);
    for (int64_t i = da; i >= db; --i) {
        mpz_class c = rem[static_cast<size_t>(i)];
        if (c == 0) continue;
        quot[static_cast<size_t>(i - db)] = c;
        rem[static_cast<size_t>(i)] = 0;
        for (int64_t j = 0; j < db; ++j) {
            const mpz_class& bj = b.coeffs()[static_cast<size_t>(j)];
            if (bj == 0) continue;
            mpz_class& target = rem[static_cast<size_t>(i - db + j)];
            if (bj == 1)
                target -= c;
            else if (bj == -1)
                target += c;
            else
                mpz_submul(target.get_mpz_t(), c.get_mpz_t(), bj.get_mpz_t());
        }
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

mpz_class poly_eval(const IntPoly& p, const mpz_class& x) {
    mpz_class acc = 0;
    for (size_t i = p.size(); i-- > 0;) {
        acc *= x;
        acc += p.coeffs()[i];
    }
    return acc;
}

IntPoly cyclotomic(uint64_t k) {
    if (k < 1) throw std::invalid_argument("cyclotomic: k must be >= 1");

    static std::map<uint64_t, IntPoly> memo;
    static std::shared_mutex memo_mutex;
    {
        std::shared_lock lock(memo_mutex);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
    }

    IntPoly result;
    if (k == 1) {
        result = IntPoly({-1, 1});
    } else {
        // z^k - 1 divided by Phi_d for every proper divisor d of k
        Coeffs c(k + 1);
        c[0] = -1;
        c[k] = 1;
        IntPoly num(std::move(c));
        for (uint64_t d = 1; d < k; ++d) {
            if (k % d != 0) continue;
            auto [q, r] = poly_divrem(num, cyclotomic(d));
            if (!r.is_zero())
                throw consistency_error("cyclotomic: nonexact division at k=" + std::to_string(k));
            num = std::move(q);
        }
        result = std::move(num);
    }

    std::unique_lock lock(memo_mutex);
    return memo.try_emplace(k, std::move(result)).first->second;
}

IntPoly build_fn(uint64_t N, const PrimeTable& t) {
    if (N < 2) throw std::invalid_argument("build_fn: N must be >= 2");
    if (N - 1 > t.limit()) throw std::out_of_range("build_fn: N-1 exceeds sieve limit");

    std::vector<uint64_t> odd_primes;
    t.for_each_prime(3, N - 1, [&](uint64_t p) {
        if (p & 1) odd_primes.push_back(p);
    });
    if (odd_primes.empty()) return IntPoly{};

    const uint64_t pmax = odd_primes.back();

    // pair_sums[s] = #{ordered (p, q) : p + q = s}
    std::vector<uint32_t> pair_sums(2 * pmax + 1, 0);
    for (uint64_t p : odd_primes) {
        pair_sums[2 * p] += 1;
        for (uint64_t q : odd_primes) {
            if (q <= p) continue;
            pair_sums[p + q] += 2;
        }
    }

    std::vector<uint64_t> counts((N - 1) * 2 * pmax + 1, 0);
    const uint64_t npr = odd_primes.size();
    counts[0] = npr * npr; // k = 0 summand
    for (uint64_t k = 1; k < N; ++k)
        for (uint64_t s = 6; s <= 2 * pmax; ++s)
            if (pair_sums[s]) counts[k * s] += pair_sums[s];

    Coeffs c(counts.size());
    for (size_t i = 0; i < counts.size(); ++i)
        if (counts[i]) c[i] = static_cast<unsigned long>(counts[i]);
    return IntPoly(std::move(c));
}

mpz_class coefficient_of(const IntPoly& p, uint64_t m) {
    return p[static_cast<size_t>(m)];
}

EquivCheck goldbach_equiv_check(uint64_t N, const PrimeTable& t) {
    if (N < 2) throw std::invalid_argument("goldbach_equiv_check: N must be >= 2");
    if (N > t.limit()) throw std::out_of_range("goldbach_equiv_check: N exceeds sieve limit");

    const IntPoly f = build_fn(N, t);
    EquivCheck res;
    if (f.is_zero()) {
        res.divides = true; // zero polynomial: divisibility holds vacuously
    } else {
        res.divides = poly_divrem(f, cyclotomic(N)).second.is_zero();
    }
    res.r_is_zero = r_single(N, t) == 0;
    res.agree = res.divides == res.r_is_zero;
    return res;
}

IntPoly quotient_f2n(uint64_t N, const PrimeTable& t) {
    if (N < 2) throw std::invalid_argument("quotient_f2n: N must be >= 2");
    const IntPoly f = build_fn(2 * N, t);
    auto [q, r] = poly_divrem(f, cyclotomic(4 * N));
    if (!r.is_zero())
        throw consistency_error("quotient_f2n: nonzero remainder at N=" + std::to_string(N) +
                                "; this contradicts a proven divisibility and means a bug");
    return q;
}

std::string to_sparse_string(const IntPoly& p) {
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p.coeffs()[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += std::to_string(i);
        out += ':';
        out += p.coeffs()[i].get_str();
    }
    return out;
}

IntPoly parse_sparse_string(std::string_view text) {
    Coeffs c;
    std::istringstream in{std::string(text)};
    std::string token;
    int64_t last_deg = -1;
    while (in >> token) {
        const auto colon = token.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
            throw std::invalid_argument("parse_sparse_string: malformed token '" + token + "'");
        size_t deg = 0;
        try {
            deg = std::stoull(token.substr(0, colon));
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_sparse_string: bad degree in '" + token + "'");
        }
        mpz_class coeff;
        if (coeff.set_str(token.substr(colon + 1), 10) != 0)
            throw std::invalid_argument("parse_sparse_string: bad coefficient in '" + token + "'");
        if (static_cast<int64_t>(deg) <= last_deg)
            throw std::invalid_argument("parse_sparse_string: degrees must be strictly ascending");
        if (coeff == 0)
            throw std::invalid_argument("parse_sparse_string: zero coefficient not allowed");
        last_deg = static_cast<int64_t>(deg);
        if (c.size() <= deg) c.resize(deg + 1);
        c[deg] = std::move(coeff);
    }
    return IntPoly(std::move(c));
}

} // namespace goldbach
