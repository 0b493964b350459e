#include <doctest.h>

#include <stdexcept>

#include "goldbach/poly.hpp"
#include "goldbach/primes.hpp"
#include "goldbach/probe.hpp"

using namespace goldbach;

namespace {

IntPoly make(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("z^2 + 1 is certified irreducible with probe prime 3") {
    const IntPoly p = make({1, 0, 1});
    const ProbeResult res = irreducibility_probe(p, {3});
    CHECK(res.verdict == Verdict::Irreducible);
    REQUIRE(res.patterns.size() == 1);
    CHECK(res.patterns[0].prime == 3);
    CHECK(res.patterns[0].factors ==
          std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}});
    CHECK(verify_probe(p, res));
}

TEST_CASE("z^2 - 1 is reducible via the root scan") {
    const IntPoly p = make({-1, 0, 1});
    const ProbeResult res = irreducibility_probe(p, {5});
    CHECK(res.verdict == Verdict::Reducible);
    REQUIRE(res.factor.has_value());
    CHECK(res.factor->degree() == 1);
    CHECK(poly_divrem(p, *res.factor).second.is_zero());
    CHECK(verify_probe(p, res));
}

TEST_CASE("a quartic with two quadratic factors is split by lifting") {
    // (z^2 + 1)(z^2 + 3) = z^4 + 4 z^2 + 3
    const IntPoly p = make({3, 0, 4, 0, 1});
    const ProbeResult res = irreducibility_probe(p, default_probe_primes(p));
    CHECK(res.verdict == Verdict::Reducible);
    REQUIRE(res.factor.has_value());
    auto [quot, rem] = poly_divrem(p, *res.factor);
    CHECK(rem.is_zero());
    CHECK(poly_mul(quot, *res.factor) == p);
    CHECK(verify_probe(p, res));
}

TEST_CASE("a product of two irreducible quadratics without rational roots") {
    // (z^2 + z + 1)(z^2 + 2) = z^4 + z^3 + 3 z^2 + 2 z + 2
    const IntPoly p = make({2, 2, 3, 1, 1});
    const ProbeResult res = irreducibility_probe(p, default_probe_primes(p));
    CHECK(res.verdict == Verdict::Reducible);
    CHECK(verify_probe(p, res));
}

TEST_CASE("content above 1 is a constant factor") {
    const IntPoly p = make({3, 0, 3});
    const ProbeResult res = irreducibility_probe(p, {5});
    CHECK(res.verdict == Verdict::Reducible);
    REQUIRE(res.factor.has_value());
    CHECK(res.factor->degree() == 0);
    CHECK(verify_probe(p, res));
}

TEST_CASE("primitive linear polynomials are irreducible") {
    const ProbeResult res = irreducibility_probe(make({-5, 1}), {3});
    CHECK(res.verdict == Verdict::Irreducible);
    CHECK(verify_probe(make({-5, 1}), res));
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(irreducibility_probe(IntPoly{}, {3}), std::invalid_argument);
    CHECK_THROWS_AS(irreducibility_probe(make({7}), {3}), std::invalid_argument);
    CHECK_THROWS_AS(irreducibility_probe(make({1, 0, 1}), {}), std::invalid_argument);
}

TEST_CASE("default probe primes exceed the degree and give squarefree reductions") {
    const IntPoly p = make({3, 0, 4, 0, 1});
    const auto primes = default_probe_primes(p, 8);
    REQUIRE(primes.size() == 8);
    uint64_t last = 4;
    for (uint64_t q : primes) {
        CHECK(q > static_cast<uint64_t>(p.degree()));
        CHECK(q > last);
        last = q;
    }
}

TEST_CASE("an irreducible quartic that needs two probe primes stays honest") {
    // z^4 + 1 factors mod every prime, so the verdict may legitimately be
    // Unknown, but it must never be Reducible.
    const IntPoly p = make({1, 0, 0, 0, 1});
    const ProbeResult res = irreducibility_probe(p, default_probe_primes(p));
    CHECK(res.verdict != Verdict::Reducible);
    CHECK(verify_probe(p, res));
}

TEST_CASE("small quotient polynomials are never declared reducible") {
    const auto t = build_prime_table(100);
    for (uint64_t N = 3; N <= 6; ++N) {
        const IntPoly q = quotient_f2n(N, t);
        const ProbeResult res = irreducibility_probe(q, default_probe_primes(q));
        CHECK(res.verdict != Verdict::Reducible);
        CHECK(verify_probe(q, res));
    }
}
