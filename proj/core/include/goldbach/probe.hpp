#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "goldbach/poly.hpp"

namespace goldbach {

enum class Verdict { Irreducible, Reducible, Unknown };

/// Distinct-degree factorization pattern of the input modulo one probe
/// prime: (factor degree, number of irreducible factors of that degree),
/// ascending by degree.
struct DegreePattern {
    uint64_t prime = 0;
    std::vector<std::pair<uint32_t, uint32_t>> factors;
    friend bool operator==(const DegreePattern&, const DegreePattern&) = default;
};

/// Outcome of the irreducibility probe.
///
/// Irreducible: `patterns` holds the mod-q degree patterns whose attainable
/// proper-factor degree sums have empty intersection; re-running the
/// factorizations reproduces them. Reducible: `factor` holds an explicit
/// nontrivial factor that divides the input exactly. Unknown: neither could
/// be established within budget; never a verdict on the mathematics.
struct ProbeResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<DegreePattern> patterns;
    std::optional<IntPoly> factor;
};

/// First `count` primes above deg(p) whose reduction of p is squarefree and
/// keeps the leading coefficient; the default prime list for the probe.
std::vector<uint64_t> default_probe_primes(const IntPoly& p, size_t count = 8);

/// Best-effort irreducibility test over Z[z].
///
/// Pipeline: content and integer-root checks; distinct-degree factorization
/// modulo each usable probe prime, intersecting attainable proper-factor
/// degree sums (empty intersection proves irreducibility); for a surviving
/// candidate degree <= degree_budget, factor combinations mod one prime are
/// Hensel-lifted and tested by exact division over Z. Requires p nonzero of
/// degree >= 1 and a nonempty prime list. The lifting step only runs for
/// monic p; non-monic inputs can still be proved Irreducible or fall back
/// to Unknown.
ProbeResult irreducibility_probe(const IntPoly& p, const std::vector<uint64_t>& probe_primes,
                                 uint32_t degree_budget = 4);

/// Re-checks a certificate against the input: exact division and
/// reconstruction for Reducible, pattern recomputation and empty
/// intersection for Irreducible. Unknown verifies trivially.
bool verify_probe(const IntPoly& p, const ProbeResult& result);

} // namespace goldbach
