#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <iostream>
#include <optional>

#include "goldbach/arith.hpp"
#include "goldbach/counts.hpp"
#include "goldbach/errors.hpp"
#include "goldbach/poly.hpp"
#include "goldbach/predictions.hpp"
#include "goldbach/primes.hpp"
#include "goldbach/probe.hpp"

namespace goldbach::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
    uint64_t sieve_limit = 0; // 0: derive from the largest requested argument
    std::string format = "csv";
    std::string output_path; // empty: stdout
    uint64_t c2_limit = 1000000;
    bool verbose = false;
};

uint64_t env_segment_size() {
    if (const char* env = std::getenv("GOLDBACH_SEGMENT_SIZE")) {
        const long long v = std::strtoll(env, nullptr, 10);
        if (v >= 64) return static_cast<uint64_t>(v);
    }
    return kDefaultSegmentSize;
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// "L..U" with both ends inclusive
std::pair<uint64_t, uint64_t> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw std::invalid_argument("range must look like L..U, got '" + text + "'");
    const std::string lo = text.substr(0, pos), hi = text.substr(pos + 2);
    try {
        const uint64_t l = std::stoull(lo), h = std::stoull(hi);
        if (l < 1 || h < l) throw std::invalid_argument("");
        return {l, h};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + text + "'");
    }
}

// integers, optionally in scientific shorthand (1e6)
uint64_t parse_count(const std::string& token) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0' || v < 1 || v > 9e15 ||
        v != std::floor(v))
        throw std::invalid_argument("bad integer '" + token + "'");
    return static_cast<uint64_t>(v);
}

std::vector<uint64_t> parse_points(const std::string& list) {
    std::vector<uint64_t> points;
    size_t start = 0;
    while (start <= list.size()) {
        const size_t comma = list.find(',', start);
        const std::string token =
            list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!token.empty()) points.push_back(parse_count(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return points;
}

class Output {
public:
    explicit Output(const RunConfig& cfg, std::ostream& fallback) {
        if (!cfg.output_path.empty()) {
            file_.open(cfg.output_path);
            if (!file_) throw std::invalid_argument("cannot open output file " + cfg.output_path);
            stream_ = &file_;
        } else {
            stream_ = &fallback;
        }
    }
    std::ostream& stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

PrimeTable make_table(const RunConfig& cfg, uint64_t needed, std::ostream& err) {
    uint64_t limit = cfg.sieve_limit ? cfg.sieve_limit : std::max<uint64_t>(needed, 2);
    if (limit < needed)
        throw std::invalid_argument("--sieve-limit " + std::to_string(limit) +
                                    " is below the required " + std::to_string(needed));
    if (cfg.verbose) err << "sieving up to " << limit << "\n";
    return build_prime_table(limit, env_segment_size());
}

// ---- tables ----------------------------------------------------------

void emit_tables(const std::string& kind, uint64_t lo, uint64_t hi,
                 const std::vector<std::pair<uint64_t, uint64_t>>& rows, const RunConfig& cfg,
                 std::ostream& os) {
    if (cfg.format == "json") {
        ordered_json doc;
        doc["meta"] = {{"generated_by", std::string("goldbach ") + kVersion},
                       {"kind", kind},
                       {"range", {{"lo", lo}, {"hi", hi}}}};
        doc["rows"] = ordered_json::array();
        for (const auto& [arg, value] : rows)
            doc["rows"].push_back({{"argument", arg}, {"exact", value}});
        os << doc.dump(2) << "\n";
    } else {
        os << "# generated-by: goldbach " << kVersion << "\n";
        os << "# kind: " << kind << "\n";
        os << "argument,exact\n";
        for (const auto& [arg, value] : rows) os << arg << ',' << value << "\n";
    }
}

int cmd_tables(const std::string& kind, const std::string& range_str,
               const std::string& parity_str, const RunConfig& cfg, std::ostream& out,
               std::ostream& err) {
    const auto [lo, hi] = parse_range(range_str);
    const Parity parity = parity_str == "all" ? Parity::All : Parity::OddOnly;
    const uint64_t needed = (kind == "A") ? 2 * hi : hi;
    const PrimeTable t = make_table(cfg, std::max<uint64_t>(needed, 2), err);

    std::vector<std::pair<uint64_t, uint64_t>> rows;
    rows.reserve(hi - lo + 1);
    if (kind == "r") {
        std::optional<RTable> rt;
        if (hi - lo >= 64) rt = r_table(hi / 2, t); // bulk path for long ranges
        for (uint64_t n = lo; n <= hi; ++n) {
            const uint64_t value =
                (rt && n % 2 == 0 && n / 2 >= 1) ? rt->r[n / 2] : r_single(n, t);
            rows.emplace_back(n, value);
        }
    } else if (kind == "a") {
        for (uint64_t m = lo; m <= hi; ++m) rows.emplace_back(m, a_single(m, t));
    } else if (kind == "a-distinct") {
        for (uint64_t m = lo; m <= hi; ++m) rows.emplace_back(m, a_distinct(m, t));
    } else if (kind == "q") {
        for (uint64_t x = lo; x <= hi; ++x) rows.emplace_back(x, q_count(x, parity, t));
    } else { // A
        for (uint64_t M = lo; M <= hi; ++M) {
            const uint64_t acc = summatory_a(M, SumMethod::DivisorAccumulation, t).value;
            const uint64_t tel = summatory_a(M, SumMethod::TelescopedQ, t).value;
            if (acc != tel)
                throw consistency_error("summatory methods disagree at M=" + std::to_string(M) +
                                        ": " + std::to_string(acc) + " vs " + std::to_string(tel));
            rows.emplace_back(M, acc);
        }
    }

    Output sink(cfg, out);
    emit_tables(kind, lo, hi, rows, cfg, sink.stream());
    return 0;
}

// ---- report ----------------------------------------------------------

const char* kind_token(ReportKind kind) {
    switch (kind) {
    case ReportKind::SummatoryVsMainTerm: return "thm1";
    case ReportKind::DivisorSumVsPrediction: return "thm3";
    case ReportKind::PairsVsHl: return "hl";
    case ReportKind::SummatoryLowerBound: return "weak-lower";
    }
    return "?";
}

void emit_report(const AsymptoticReport& rep, const RunConfig& cfg, std::ostream& os) {
    const bool brackets = rep.kind == ReportKind::DivisorSumVsPrediction;
    if (cfg.format == "json") {
        ordered_json doc;
        doc["meta"] = {{"generated_by", std::string("goldbach ") + kVersion},
                       {"kind", kind_token(rep.kind)},
                       {"c2",
                        {{"value", rep.c2.value},
                         {"error_bound", rep.c2.error_bound},
                         {"truncation_limit", rep.c2.truncation_limit}}},
                       {"band_note", rep.band_note}};
        doc["rows"] = ordered_json::array();
        for (const auto& row : rep.rows) {
            ordered_json r = {{"argument", row.argument},
                              {"exact", row.exact},
                              {"predicted", row.predicted},
                              {"ratio", row.ratio},
                              {"normalized_residual", row.normalized_residual}};
            if (brackets) {
                r["lower_bracket"] = *row.lower_bracket;
                r["upper_bracket"] = *row.upper_bracket;
            }
            doc["rows"].push_back(std::move(r));
        }
        os << doc.dump(2) << "\n";
    } else {
        os << "# generated-by: goldbach " << kVersion << "\n";
        os << "# kind: " << kind_token(rep.kind) << "\n";
        os << "# c2-value: " << format_real(rep.c2.value) << "\n";
        os << "# c2-error-bound: " << format_real(rep.c2.error_bound) << "\n";
        os << "# c2-truncation: " << rep.c2.truncation_limit << "\n";
        os << "# bands: " << rep.band_note << "\n";
        os << "argument,exact,predicted,ratio,normalized_residual";
        if (brackets) os << ",lower_bracket,upper_bracket";
        os << "\n";
        for (const auto& row : rep.rows) {
            os << row.argument << ',' << row.exact << ',' << format_real(row.predicted) << ','
               << format_real(row.ratio) << ',' << format_real(row.normalized_residual);
            if (brackets)
                os << ',' << format_real(*row.lower_bracket) << ','
                   << format_real(*row.upper_bracket);
            os << "\n";
        }
    }
}

int cmd_report(const std::string& kind_str, const std::string& points_str, uint64_t center,
               uint64_t count, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    ReportKind kind;
    if (kind_str == "thm1")
        kind = ReportKind::SummatoryVsMainTerm;
    else if (kind_str == "thm3")
        kind = ReportKind::DivisorSumVsPrediction;
    else if (kind_str == "hl")
        kind = ReportKind::PairsVsHl;
    else
        kind = ReportKind::SummatoryLowerBound;

    std::vector<uint64_t> points;
    if (!points_str.empty()) points = parse_points(points_str);
    if (center) {
        const uint64_t half = count / 2;
        for (uint64_t i = 0; i < count; ++i) points.push_back(center - half + i);
    }
    if (points.empty()) throw std::invalid_argument("no report points given");

    const uint64_t min_arg =
        (kind == ReportKind::SummatoryVsMainTerm || kind == ReportKind::SummatoryLowerBound) ? 3
                                                                                             : 2;
    uint64_t max_point = 0;
    for (uint64_t p : points) {
        if (p < min_arg)
            throw std::invalid_argument("report argument " + std::to_string(p) +
                                        " below the domain minimum " + std::to_string(min_arg));
        max_point = std::max(max_point, p);
    }

    const uint64_t needed = std::max(2 * max_point, cfg.c2_limit);
    const PrimeTable t = make_table(cfg, needed, err);
    const ConstantEstimate c2 = twin_prime_constant(cfg.c2_limit, t);
    const AsymptoticReport rep = build_report(kind, points, t, c2);

    Output sink(cfg, out);
    emit_report(rep, cfg, sink.stream());
    return 0;
}

// ---- poly ------------------------------------------------------------

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Irreducible: return "Irreducible";
    case Verdict::Reducible: return "Reducible";
    case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

IntPoly load_poly(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read polynomial dump " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_sparse_string(text);
}

int cmd_poly(const std::string& action, uint64_t N, bool dump, const std::string& primes_str,
             uint32_t degree_budget, const std::string& input_path, const RunConfig& cfg,
             std::ostream& out, std::ostream& err) {
    const bool from_file = action == "probe" && !input_path.empty();
    if (N < 1 && !from_file)
        throw std::invalid_argument("poly " + action + " needs a positive N");

    Output sink(cfg, out);
    std::ostream& os = sink.stream();

    if (from_file) {
        const IntPoly p = load_poly(input_path);
        std::vector<uint64_t> primes =
            primes_str.empty() ? default_probe_primes(p) : parse_points(primes_str);
        const ProbeResult res = irreducibility_probe(p, primes, degree_budget);
        os << "verdict=" << verdict_name(res.verdict) << "\n";
        for (const auto& pat : res.patterns) {
            os << "pattern prime=" << pat.prime << ":";
            for (const auto& [deg, cnt] : pat.factors) os << ' ' << cnt << 'x' << deg;
            os << "\n";
        }
        if (res.factor) os << "factor " << to_sparse_string(*res.factor) << "\n";
        os << "certificate-verified=" << (verify_probe(p, res) ? "true" : "false") << "\n";
        return 0;
    }

    const uint64_t needed = (action == "quotient" || action == "probe") ? 2 * N : N;
    const PrimeTable t = make_table(cfg, std::max<uint64_t>(needed, 2), err);

    if (action == "build") {
        const IntPoly f = build_fn(N, t);
        size_t nonzero = 0;
        for (const auto& c : f.coeffs())
            if (c != 0) ++nonzero;
        os << "degree=" << f.degree() << " constant=" << coefficient_of(f, 0).get_str()
           << " nonzero-terms=" << nonzero << "\n";
        if (dump) os << to_sparse_string(f) << "\n";
        return 0;
    }
    if (action == "divides") {
        const IntPoly f = build_fn(N, t);
        const bool divides = f.is_zero() || poly_divrem(f, cyclotomic(N)).second.is_zero();
        os << "divides=" << (divides ? "true" : "false") << "\n";
        return 0;
    }
    if (action == "equiv") {
        const EquivCheck e = goldbach_equiv_check(N, t);
        os << "divides=" << (e.divides ? "true" : "false")
           << " r_zero=" << (e.r_is_zero ? "true" : "false")
           << " agree=" << (e.agree ? "true" : "false") << "\n";
        return e.agree ? 0 : 3;
    }
    if (action == "quotient") {
        const IntPoly q = quotient_f2n(N, t);
        os << to_sparse_string(q) << "\n";
        return 0;
    }
    // probe
    const IntPoly q = quotient_f2n(N, t);
    std::vector<uint64_t> primes;
    if (!primes_str.empty())
        primes = parse_points(primes_str);
    else
        primes = default_probe_primes(q);
    const ProbeResult res = irreducibility_probe(q, primes, degree_budget);
    os << "verdict=" << verdict_name(res.verdict) << "\n";
    for (const auto& pat : res.patterns) {
        os << "pattern prime=" << pat.prime << ":";
        for (const auto& [deg, cnt] : pat.factors) os << ' ' << cnt << 'x' << deg;
        os << "\n";
    }
    if (res.factor) os << "factor " << to_sparse_string(*res.factor) << "\n";
    os << "certificate-verified=" << (verify_probe(q, res) ? "true" : "false") << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Goldbach pair counts, divisor-sum tables, asymptotic reports, and "
                 "cyclotomic divisibility checks"};
    app.set_version_flag("--version", std::string("goldbach ") + kVersion);

    RunConfig cfg;
    app.add_option("--sieve-limit", cfg.sieve_limit,
                   "sieve this far instead of deriving the limit from the arguments");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", cfg.output_path, "write to this file instead of stdout");
    app.add_flag("--verbose", cfg.verbose, "progress notes on stderr");

    app.fallthrough();

    std::string tables_kind, tables_range, parity = "odd";
    auto* tables = app.add_subcommand("tables", "exact value tables: R, a, distinct-a, Q, A");
    tables->fallthrough();
    tables->add_option("kind", tables_kind)
        ->required()
        ->check(CLI::IsMember({"r", "a", "a-distinct", "q", "A"}));
    tables->add_option("range", tables_range, "inclusive range L..U")->required();
    tables->add_option("--parity", parity, "prime parity for q tables")
        ->check(CLI::IsMember({"all", "odd"}));

    std::string report_kind, report_points;
    uint64_t report_center = 0, report_count = 100;
    auto* report = app.add_subcommand("report", "exact values against asymptotic predictions");
    report->fallthrough();
    report->add_option("kind", report_kind)
        ->required()
        ->check(CLI::IsMember({"thm1", "thm3", "hl", "weak-lower"}));
    report->add_option("--points", report_points, "comma-separated arguments (1e6 shorthand ok)");
    report->add_option("--center", report_center, "center of a consecutive sample window");
    report->add_option("--count", report_count, "window width for --center");
    report->add_option("--c2-limit", cfg.c2_limit, "truncation limit for the twin-prime product");

    std::string poly_action, poly_primes, poly_input;
    uint64_t poly_n = 0;
    uint32_t degree_budget = 4;
    bool poly_dump = false;
    auto* poly = app.add_subcommand("poly", "polynomial builds, divisibility, quotients, probes");
    poly->fallthrough();
    poly->add_option("action", poly_action)
        ->required()
        ->check(CLI::IsMember({"build", "divides", "equiv", "quotient", "probe"}));
    poly->add_option("N", poly_n, "index; optional for probe --input");
    poly->add_flag("--dump", poly_dump, "print the sparse coefficient dump");
    poly->add_option("--primes", poly_primes, "comma-separated probe primes");
    poly->add_option("--degree-budget", degree_budget, "max degree for factor lifting");
    poly->add_option("--input", poly_input, "probe a polynomial loaded from a sparse dump file");

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("goldbach");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // prints help/version to out or the diagnostic to err
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tables->parsed()) return cmd_tables(tables_kind, tables_range, parity, cfg, out, err);
        if (report->parsed())
            return cmd_report(report_kind, report_points, report_center, report_count, cfg, out,
                              err);
        return cmd_poly(poly_action, poly_n, poly_dump, poly_primes, degree_budget, poly_input,
                        cfg, out, err);
    } catch (const consistency_error& e) {
        err << "consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace goldbach::cli
