#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "calibration.hpp"
#include "goldbach/counts.hpp"
#include "goldbach/predictions.hpp"

using namespace goldbach;

namespace {

const PrimeTable& table() {
    static const PrimeTable t = build_prime_table(20000);
    return t;
}

const ConstantEstimate& c2() {
    static const ConstantEstimate est = twin_prime_constant(20000, table());
    return est;
}

} // namespace

TEST_CASE("prediction formulas instantiate as written") {
    const double ln2 = std::log(2.0);
    CHECK(hl_prediction(2, c2()) ==
          doctest::Approx(2.0 * c2().value * 2.0 / (ln2 * ln2)).epsilon(1e-12));

    const double ln3 = std::log(3.0);
    const double pi = 3.14159265358979323846;
    CHECK(summatory_main_term(3) == doctest::Approx(pi * pi * 9.0 / (3.0 * ln3 * ln3)));

    CHECK_THROWS_AS(hl_prediction(1, c2()), std::invalid_argument);
    CHECK_THROWS_AS(summatory_main_term(2), std::invalid_argument);
    CHECK_THROWS_AS(divisor_sum_prediction(1, c2()), std::invalid_argument);
    CHECK_THROWS_AS(prediction_bracket(1, c2()), std::invalid_argument);
}

TEST_CASE("powers of two reduce the prediction to the 2-adic factor") {
    for (uint32_t k = 1; k <= 10; ++k) {
        const uint64_t m = uint64_t{1} << k;
        const double lnm = std::log(static_cast<double>(m));
        const double expected = 2.0 * c2().value * (2.0 - std::pow(2.0, -double(k))) *
                                static_cast<double>(m) / (lnm * lnm);
        CHECK(divisor_sum_prediction(m, c2()) == doctest::Approx(expected).epsilon(1e-12));

        // empty odd product: the bracket is exactly a factor of 2 wide
        const auto [lo, hi] = prediction_bracket(m, c2());
        CHECK(hi / lo == doctest::Approx(2.0).epsilon(1e-12));

        // f is 1 on powers of two
        CHECK(hl_prediction(m, c2()) ==
              doctest::Approx(2.0 * c2().value * m / (lnm * lnm)).epsilon(1e-12));
    }
}

TEST_CASE("bracket at m = 3 carries the odd product 7/3") {
    const auto [lo, hi] = prediction_bracket(3, c2());
    CHECK(hi / lo == doctest::Approx(2.0 * 7.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("the prediction sits inside its bracket") {
    for (uint64_t m = 2; m <= 2000; ++m) {
        const auto [lo, hi] = prediction_bracket(m, c2());
        const double pred = divisor_sum_prediction(m, c2());
        CHECK(lo <= pred * (1 + 1e-12));
        CHECK(pred <= hi * (1 + 1e-12));
        CHECK(std::isfinite(pred));
        CHECK(pred > 0.0);
    }
}

TEST_CASE("summatory report rows carry exact values and ratios") {
    const auto rep =
        build_report(ReportKind::SummatoryVsMainTerm, {100, 500, 1000}, table(), c2());
    REQUIRE(rep.rows.size() == 3);
    for (const auto& row : rep.rows) {
        CHECK(row.exact == summatory_a(row.argument, SumMethod::TelescopedQ, table()).value);
        CHECK(row.predicted == doctest::Approx(summatory_main_term(row.argument)));
        CHECK(row.ratio ==
              doctest::Approx(static_cast<double>(row.exact) / row.predicted));
        CHECK(!row.lower_bracket.has_value());
    }
    CHECK(!rep.band_note.empty());
}

TEST_CASE("divisor-sum report rows carry brackets") {
    const auto rep = build_report(ReportKind::DivisorSumVsPrediction, {64, 100, 4096},
                                  table(), c2());
    for (const auto& row : rep.rows) {
        REQUIRE(row.lower_bracket.has_value());
        REQUIRE(row.upper_bracket.has_value());
        CHECK(*row.lower_bracket <= row.predicted * (1 + 1e-12));
        CHECK(row.predicted <= *row.upper_bracket * (1 + 1e-12));
        CHECK(row.exact == a_single(2 * row.argument, table()));
    }
}

TEST_CASE("pair report and lower-bound report") {
    const auto hl = build_report(ReportKind::PairsVsHl, {50, 500}, table(), c2());
    CHECK(hl.rows[0].exact == r_single(100, table()));
    CHECK(hl.rows[1].exact == r_single(1000, table()));

    const auto weak = build_report(ReportKind::SummatoryLowerBound, {1000}, table(), c2());
    const double mlnm = 1000.0 * std::log(1000.0);
    CHECK(weak.rows[0].predicted == doctest::Approx(mlnm));
    CHECK(weak.rows[0].exact >= mlnm); // dominance is overwhelming at this scale
}

TEST_CASE("empty argument list produces an empty report") {
    const auto rep = build_report(ReportKind::PairsVsHl, {}, table(), c2());
    CHECK(rep.rows.empty());
}

TEST_CASE("divisor-sum ratios near 10^6 stay in the frozen band") {
    const auto t = build_prime_table(2200000);
    const auto est = twin_prime_constant(1000000, t);
    const auto rep = build_report(ReportKind::DivisorSumVsPrediction,
                                  {999998, 999999, 1000000, 1000001, 1048576}, t, est);
    for (const auto& row : rep.rows) {
        CHECK(row.ratio >= calibration::kDivisorSumRatioLo);
        CHECK(row.ratio <= calibration::kDivisorSumRatioHi);
        CHECK(*row.lower_bracket <= row.predicted);
        CHECK(row.predicted <= *row.upper_bracket);
    }
}
