#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "qwilson/cli.hpp"
#include "qwilson/report_io.hpp"
#include "qwilson/theorems.hpp"

using namespace qwilson;

namespace {

struct CliResult {
    int code = -1;
    std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("JSON report round-trip over a golden range") {
    RunOptions opts;
    opts.selection = CheckSelection::all();
    for (const auto& rep : run_range(5, 60, opts)) {
        std::string emitted = report_to_json(rep);
        VerificationReport parsed = report_from_json(emitted);
        CHECK(parsed == rep);
        CHECK(report_to_json(parsed) == emitted);
    }
}

TEST_CASE("verify: small range, json") {
    CliResult r = cli({"verify", "--min", "5", "--max", "7", "--format", "json"});
    CHECK(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    VerificationReport r5 = report_from_json(lines[0]);
    VerificationReport r7 = report_from_json(lines[1]);
    CHECK(r5.p == 5);
    CHECK(r7.p == 7);
    CHECK(r5.all_passed());
    CHECK(r7.all_passed());
    for (const auto& c : r5.checks) CHECK(c.ms == 0); // deterministic by default
}

TEST_CASE("verify: empty range is a vacuous success") {
    CliResult r = cli({"verify", "--min", "4", "--max", "4", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("verify: output bytes are independent of parallelism") {
    CliResult a = cli({"verify", "--min", "5", "--max", "60", "--format", "json",
                       "--theorems", "1,2,3,4,4-stated,corollaries,proof-identities",
                       "--jobs", "1"});
    CliResult b = cli({"verify", "--min", "5", "--max", "60", "--format", "json",
                       "--theorems", "1,2,3,4,4-stated,corollaries,proof-identities",
                       "--jobs", "3"});
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);

    CliResult c = cli({"verify", "--min", "5", "--max", "40", "--format", "csv", "--jobs", "2"});
    CliResult d = cli({"verify", "--min", "5", "--max", "40", "--format", "csv", "--jobs", "1"});
    CHECK(c.out == d.out);
}

TEST_CASE("verify: csv shape") {
    CliResult r = cli({"verify", "--min", "5", "--max", "5", "--format", "csv",
                       "--theorems", "1,3"});
    CHECK(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "p,check,status,ms");
    CHECK(lines[1] == "5,theorem1,inapplicable,0");
    CHECK(lines[2] == "5,theorem3,pass,0");
}

TEST_CASE("verify: literal t=1 variant yields exit 1 where it fails") {
    CliResult r = cli({"verify", "--min", "13", "--max", "13", "--format", "json",
                       "--theorems", "4-stated"});
    CHECK(r.code == 1);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1);
    VerificationReport rep = report_from_json(lines[0]);
    CHECK(rep.checks.size() == 1);
    CHECK(rep.checks[0].name == "theorem4-stated");
    CHECK(rep.checks[0].status == CheckStatus::fail);
    REQUIRE(rep.checks[0].witness.has_value());
    CHECK(rep.checks[0].witness->lhs.find("fnv1a64=") != std::string::npos);
}

TEST_CASE("verify: fail-fast emits the failing record and stops") {
    CliResult r = cli({"verify", "--min", "13", "--max", "17", "--format", "json",
                       "--theorems", "4-stated", "--fail-fast"});
    CHECK(r.code == 1);
    CHECK(lines_of(r.out).size() == 1);

    CliResult all = cli({"verify", "--min", "13", "--max", "17", "--format", "json",
                         "--theorems", "4-stated"});
    CHECK(lines_of(all.out).size() == 2);
}

TEST_CASE("help exits 0") {
    CliResult top = cli({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("verify") != std::string::npos);
    CHECK(cli({"verify", "--help"}).code == 0);
}

TEST_CASE("range below 5 is clamped to the first verifiable prime") {
    CliResult r = cli({"verify", "--min", "2", "--max", "7", "--format", "json"});
    CHECK(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(report_from_json(lines[0]).p == 5);
    CHECK(report_from_json(lines[1]).p == 7);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(cli({"verify", "--min", "7", "--max", "5"}).code == 2);
    CHECK(cli({"verify", "--min", "5", "--max", "7", "--theorems", "nope"}).code == 2);
    CHECK(cli({"verify", "--min", "5", "--max", "7", "--format", "xml"}).code == 2);
    CHECK(cli({"verify", "--max", "7"}).code == 2);
    CHECK(cli({"inspect", "6"}).code == 2);
    CHECK(cli({"inspect", "4"}).code == 2);
    CHECK(cli({"classnum", "3"}).code == 2);
    CHECK(cli({"classnum", "9"}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"verify", "--min", "5", "--max", "7", "--jobs", "0"}).code == 2);
}

TEST_CASE("inspect output shows both sides") {
    CliResult r5 = cli({"inspect", "5"});
    CHECK(r5.code == 0);
    CHECK(r5.out.find("2 + q^2 + q^3") != std::string::npos);
    CHECK(r5.out.find("h(p) = 1") != std::string::npos);

    CliResult r7 = cli({"inspect", "7"});
    CHECK(r7.code == 0);
    CHECK(r7.out.find("-1") != std::string::npos);
    CHECK(r7.out.find("-q") != std::string::npos);
    CHECK(r7.out.find("h(-p) = 1") != std::string::npos);
}

TEST_CASE("classnum output") {
    CliResult r23 = cli({"classnum", "23"});
    CHECK(r23.code == 0);
    CHECK(r23.out.find("h(-23) = 3 (character-sum formula)") != std::string::npos);
    CHECK(r23.out.find("h(-23) = 3 (reduced-forms count)") != std::string::npos);

    CliResult r61 = cli({"classnum", "61"});
    CHECK(r61.code == 0);
    CHECK(r61.out.find("h(61) = 1 (exact ring match)") != std::string::npos);
    CHECK(r61.out.find("(39 + 5*sqrt(61))/2, norm -1") != std::string::npos);

    CliResult r229 = cli({"classnum", "229"});
    CHECK(r229.code == 0);
    CHECK(r229.out.find("h(229) = 3 (exact ring match)") != std::string::npos);
    CHECK(r229.out.find("h(229) = 3 (numeric cross-check)") != std::string::npos);
}

TEST_CASE("QWILSON_JOBS is the --jobs default; bad values are usage errors") {
    setenv("QWILSON_JOBS", "2", 1);
    CliResult ok = cli({"verify", "--min", "5", "--max", "13", "--format", "json"});
    CHECK(ok.code == 0);
    setenv("QWILSON_JOBS", "banana", 1);
    CliResult bad = cli({"verify", "--min", "5", "--max", "13", "--format", "json"});
    CHECK(bad.code == 2);
    unsetenv("QWILSON_JOBS");

    // env value must match the same range run single-threaded
    CliResult base = cli({"verify", "--min", "5", "--max", "13", "--format", "json"});
    setenv("QWILSON_JOBS", "3", 1);
    CliResult env3 = cli({"verify", "--min", "5", "--max", "13", "--format", "json"});
    unsetenv("QWILSON_JOBS");
    CHECK(base.out == env3.out);
}

TEST_CASE("human format mentions failures with witnesses") {
    CliResult r = cli({"verify", "--min", "13", "--max", "13", "--theorems", "4-stated"});
    CHECK(r.code == 1);
    CHECK(r.out.find("theorem4-stated") != std::string::npos);
    CHECK(r.out.find("fail") != std::string::npos);
    CHECK(r.out.find("lhs:") != std::string::npos);
}

TEST_CASE("timing flag keeps json parseable") {
    CliResult r = cli({"verify", "--min", "5", "--max", "7", "--format", "json", "--timing"});
    CHECK(r.code == 0);
    for (const auto& line : lines_of(r.out)) {
        VerificationReport rep = report_from_json(line);
        for (const auto& c : rep.checks) CHECK(c.ms >= 0);
    }
}
