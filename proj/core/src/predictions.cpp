#include "goldbach/predictions.hpp"

#include <cmath>
#include <stdexcept>

#include "goldbach/counts.hpp"

namespace goldbach {

namespace {

double log_squared(uint64_t n) {
    const double l = std::log(static_cast<double>(n));
    return l * l;
}

// prod over odd p^l || m of (1 - 2/p^(l+1)) (1 - 2/p)^{-1}, as a double
double odd_part_product(uint64_t m) {
    double prod = 1.0;
    for (const auto& pp : factorize(m)) {
        if (pp.prime == 2) continue;
        double p_l1 = static_cast<double>(pp.prime);
        for (uint32_t i = 0; i < pp.exponent; ++i) p_l1 *= static_cast<double>(pp.prime);
        prod *= (1.0 - 2.0 / p_l1) / (1.0 - 2.0 / static_cast<double>(pp.prime));
    }
    return prod;
}

} // namespace

double hl_prediction(uint64_t n, const ConstantEstimate& c2) {
    if (n < 2) throw std::invalid_argument("hl_prediction: n must be >= 2");
    return 2.0 * c2.value * f_hl(n).get_d() * static_cast<double>(n) / log_squared(n);
}

double summatory_main_term(uint64_t M) {
    if (M < 3) throw std::invalid_argument("summatory_main_term: M must be >= 3");
    const double pi = 3.14159265358979323846;
    const double m = static_cast<double>(M);
    return pi * pi * m * m / (3.0 * log_squared(M));
}

double divisor_sum_prediction(uint64_t m, const ConstantEstimate& c2) {
    if (m < 2) throw std::invalid_argument("divisor_sum_prediction: m must be >= 2");
    return 2.0 * c2.value * j_mult(m).get_d() * static_cast<double>(m) / log_squared(m);
}

std::pair<double, double> prediction_bracket(uint64_t m, const ConstantEstimate& c2) {
    if (m < 2) throw std::invalid_argument("prediction_bracket: m must be >= 2");
    const double base = 2.0 * c2.value * static_cast<double>(m) / log_squared(m);
    return {base, 2.0 * base * odd_part_product(m)};
}

AsymptoticReport build_report(ReportKind kind, const std::vector<uint64_t>& args,
                              const PrimeTable& t, const ConstantEstimate& c2) {
    AsymptoticReport report;
    report.kind = kind;
    report.c2 = c2;
    report.band_note =
        "comparison bands are empirical calibration constants, not derived error bounds";

    for (uint64_t arg : args) {
        ReportRow row;
        row.argument = arg;
        switch (kind) {
        case ReportKind::SummatoryVsMainTerm: {
            row.exact = summatory_a(arg, SumMethod::TelescopedQ, t).value;
            row.predicted = summatory_main_term(arg);
            const double lnM = std::log(static_cast<double>(arg));
            row.normalized_residual =
                std::abs(static_cast<double>(row.exact) - row.predicted) * lnM * lnM * lnM /
                (static_cast<double>(arg) * static_cast<double>(arg) * std::log(lnM));
            break;
        }
        case ReportKind::DivisorSumVsPrediction: {
            row.exact = a_single(2 * arg, t);
            row.predicted = divisor_sum_prediction(arg, c2);
            const auto [lo, hi] = prediction_bracket(arg, c2);
            row.lower_bracket = lo;
            row.upper_bracket = hi;
            row.normalized_residual =
                std::abs(static_cast<double>(row.exact) - row.predicted) / row.predicted;
            break;
        }
        case ReportKind::PairsVsHl: {
            row.exact = r_single(2 * arg, t);
            row.predicted = hl_prediction(arg, c2);
            row.normalized_residual =
                std::abs(static_cast<double>(row.exact) - row.predicted) / row.predicted;
            break;
        }
        case ReportKind::SummatoryLowerBound: {
            row.exact = summatory_a(arg, SumMethod::TelescopedQ, t).value;
            row.predicted = static_cast<double>(arg) * std::log(static_cast<double>(arg));
            row.normalized_residual =
                (static_cast<double>(row.exact) - row.predicted) / static_cast<double>(arg);
            break;
        }
        }
        row.ratio = row.predicted > 0.0 ? static_cast<double>(row.exact) / row.predicted : 0.0;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace goldbach
