#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goldbach/arith.hpp"
#include "goldbach/primes.hpp"

namespace goldbach {

/// What a report confronts against what.
enum class ReportKind {
    SummatoryVsMainTerm,    ///< exact A(M) against pi^2 M^2 / (3 ln^2 M)
    DivisorSumVsPrediction, ///< exact a(2m) against 2 C2 J(m) m / ln^2 m, with bracket
    PairsVsHl,              ///< exact R(2n) against 2 C2 f(n) n / ln^2 n
    SummatoryLowerBound,    ///< exact A(M) against M ln M
};

struct ReportRow {
    uint64_t argument = 0;
    uint64_t exact = 0;
    double predicted = 0.0;
    double ratio = 0.0;
    /// Residual scaled by the error-term shape of the relevant asymptotic:
    /// |A - main| ln^3 M / (M^2 lnln M) for the summatory main term,
    /// the relative residual for the conjectural per-argument predictions,
    /// and the signed margin (A - M ln M)/M for the lower bound.
    double normalized_residual = 0.0;
    std::optional<double> lower_bracket; // DivisorSumVsPrediction rows only
    std::optional<double> upper_bracket;
};

struct AsymptoticReport {
    ReportKind kind = ReportKind::SummatoryVsMainTerm;
    ConstantEstimate c2;
    std::string band_note; // provenance of any comparison bands
    std::vector<ReportRow> rows;
};

/// 2 C2 f(n) n / ln^2 n, the conjectural size of R(2n). n >= 2.
double hl_prediction(uint64_t n, const ConstantEstimate& c2);

/// pi^2 M^2 / (3 ln^2 M), the unconditional main term of A(M). M >= 3.
double summatory_main_term(uint64_t M);

/// 2 C2 J(m) m / ln^2 m, the conjectural size of a(2m). m >= 2.
double divisor_sum_prediction(uint64_t m, const ConstantEstimate& c2);

/// (lower, upper) bracket around a(2m):
///   lower = 2 C2 m / ln^2 m,
///   upper = 4 C2 m / ln^2 m * prod over odd p^l || m of (1-2/p^(l+1))/(1-2/p).
/// The point prediction always lies inside. m >= 2.
std::pair<double, double> prediction_bracket(uint64_t m, const ConstantEstimate& c2);

/// One row per argument, exact side computed from the table. Rows are
/// deterministic functions of their inputs; serialization is the CLI's job.
AsymptoticReport build_report(ReportKind kind, const std::vector<uint64_t>& args,
                              const PrimeTable& t, const ConstantEstimate& c2);

} // namespace goldbach
