#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "goldbach/poly.hpp"
#include "goldbach/primes.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = goldbach::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("tables a 1..10 reproduces the first ten divisor sums") {
    const auto r = run({"tables", "a", "1..10"});
    REQUIRE(r.code == 0);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] == "argument,exact");
    const char* expected[] = {"1,0", "2,0", "3,0", "4,0", "5,0",
                              "6,1", "7,0", "8,2", "9,0", "10,3"};
    for (int i = 0; i < 10; ++i) CHECK(lines[i + 1] == expected[i]);
    CHECK(r.out.find("# generated-by: goldbach") != std::string::npos);
}

TEST_CASE("tables A cross-checks both algorithms and prints the sum") {
    const auto r = run({"tables", "A", "5..5"});
    REQUIRE(r.code == 0);
    CHECK(data_lines(r.out).back() == "5,6");
}

TEST_CASE("tables q honors the parity flag") {
    const auto odd = run({"tables", "q", "5..5", "--parity", "odd"});
    CHECK(data_lines(odd.out).back() == "5,0");
    const auto all = run({"tables", "q", "10..10", "--parity", "all"});
    CHECK(data_lines(all.out).back() == "10,13");
}

TEST_CASE("tables r uses the bulk path on long ranges") {
    const auto r = run({"tables", "r", "2..200"});
    REQUIRE(r.code == 0);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 200);
    CHECK(lines[5] == "6,1");   // R(6)
    CHECK(lines[9] == "10,3");  // R(10)
    CHECK(lines[99] == "100,12");
}

TEST_CASE("json output carries meta and parses back") {
    const auto r = run({"tables", "a", "1..10", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["meta"]["kind"] == "a");
    REQUIRE(doc["rows"].size() == 10);
    CHECK(doc["rows"][5]["argument"] == 6);
    CHECK(doc["rows"][5]["exact"] == 1);
}

TEST_CASE("identical invocations produce identical bytes") {
    for (const std::vector<std::string> args :
         {std::vector<std::string>{"report", "thm1", "--points", "100,1000"},
          std::vector<std::string>{"tables", "a", "1..50", "--format", "json"}}) {
        const auto first = run(args);
        const auto second = run(args);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("report thm1 emits ratio rows and constant metadata") {
    const auto r = run({"report", "thm1", "--points", "1e2,1e3"});
    REQUIRE(r.code == 0);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "argument,exact,predicted,ratio,normalized_residual");
    CHECK(lines[1].substr(0, 4) == "100,");
    CHECK(r.out.find("# c2-value:") != std::string::npos);
    CHECK(r.out.find("# c2-error-bound:") != std::string::npos);
    CHECK(r.out.find("# bands:") != std::string::npos);
}

TEST_CASE("report thm3 rows satisfy the bracket ordering") {
    const auto r = run({"report", "thm3", "--points", "4096", "--format", "json",
                        "--c2-limit", "100000"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["rows"].size() == 1);
    const auto& row = doc["rows"][0];
    const double lo = row["lower_bracket"], hi = row["upper_bracket"],
                 pred = row["predicted"];
    CHECK(lo <= pred);
    CHECK(pred <= hi);
}

TEST_CASE("empty point list is a usage error") {
    const auto r = run({"report", "thm1"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("poly build 10 --dump prints the sparse expansion") {
    const auto r = run({"poly", "build", "10", "--dump"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("0:9 6:1 8:2 10:3") != std::string::npos);
    CHECK(r.out.find("126:1") != std::string::npos);
    CHECK(r.out.find("degree=126") != std::string::npos);
}

TEST_CASE("poly equiv reports the agreement triple") {
    const auto at10 = run({"poly", "equiv", "10"});
    CHECK(at10.code == 0);
    CHECK(at10.out == "divides=false r_zero=false agree=true\n");

    const auto at11 = run({"poly", "equiv", "11"});
    CHECK(at11.code == 0);
    CHECK(at11.out == "divides=true r_zero=true agree=true\n");
}

TEST_CASE("poly quotient dump parses back to the exact quotient") {
    const auto r = run({"poly", "quotient", "2"});
    REQUIRE(r.code == 0);
    std::string line = r.out;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    const auto parsed = goldbach::parse_sparse_string(line);
    const auto t = goldbach::build_prime_table(10);
    CHECK(parsed == goldbach::quotient_f2n(2, t));
}

TEST_CASE("poly probe emits a verdict and a verified certificate") {
    const auto r = run({"poly", "probe", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("verdict=") != std::string::npos);
    CHECK(r.out.find("certificate-verified=true") != std::string::npos);
}

TEST_CASE("poly dump and load round trip through a file") {
    const std::string path = "cli_quotient_dump.txt";
    const auto dumped = run({"poly", "quotient", "3", "--output", path});
    REQUIRE(dumped.code == 0);
    const auto probed = run({"poly", "probe", "--input", path});
    REQUIRE(probed.code == 0);
    CHECK(probed.out.find("verdict=") != std::string::npos);
    CHECK(probed.out.find("certificate-verified=true") != std::string::npos);
    std::remove(path.c_str());

    CHECK(run({"poly", "probe", "--input", "no_such_file.txt"}).code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"tables", "a", "10..1"}).code == 2);
    CHECK(run({"tables", "bogus", "1..10"}).code == 2);
    CHECK(run({"tables", "a", "1..100", "--sieve-limit", "10"}).code == 2);
    CHECK(run({"poly", "equiv", "0"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("--output writes the same bytes to a file") {
    const std::string path = "cli_test_output.csv";
    const auto direct = run({"tables", "a", "1..10"});
    const auto filed = run({"tables", "a", "1..10", "--output", path});
    REQUIRE(filed.code == 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("--version names the tool") {
    const auto r = run({"--version"});
    CHECK(r.code == 0);
}
