#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "treg/error.hpp"
#include "treg/report/commands.hpp"
#include "treg/report/config.hpp"
#include "treg/report/corpus.hpp"
#include "treg/report/verification.hpp"

using namespace treg;
using namespace treg::report;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(TREG_CORPUS_DIR) + "/" + name, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::invalid_argument;
}

void replace_once(std::string& s, const std::string& from, const std::string& to, const std::string& after = {}) {
    auto at = s.find(from, after.empty() ? 0 : s.find(after));
    REQUIRE(at != std::string::npos);
    s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("config: defaults, overrides, hash") {
    RunConfig d;
    CHECK(d.canonical() == "lattice_truncation=20\nmax_depth=14\nmc_n=200000\nmc_seed=1\ntol=1e-08\n");
    CHECK(d.hash().size() == 16);
    CHECK(d.hash() == RunConfig{}.hash());

    auto c = parse_config("# comment\n tol = 1e-6 \nmc_seed=7\n\nmax_depth=10 # trailing\n");
    CHECK(c.tol == 1e-6);
    CHECK(c.mc_seed == 7);
    CHECK(c.max_depth == 10);
    CHECK(c.mc_n == d.mc_n);
    CHECK(c.hash() != d.hash());
    CHECK(parse_config("mc_seed=2").hash() != parse_config("mc_seed=3").hash());
    CHECK(parse_config("tol=1e-8").hash() == d.hash());

    CHECK(code_of([] { parse_config("tolerance=1"); }) == ErrorCode::schema_invalid);
    CHECK(code_of([] { parse_config("tol"); }) == ErrorCode::schema_invalid);
    CHECK(code_of([] { parse_config("tol=abc"); }) == ErrorCode::schema_invalid);
    CHECK(code_of([] { parse_config("tol=-1"); }) == ErrorCode::schema_invalid);
    CHECK(code_of([] { parse_config("mc_n=1"); }) == ErrorCode::schema_invalid);
}

TEST_CASE("FNV-1a hash of a known string") {
    // canonical text of a config is hashed byte by byte; check against an independent evaluation
    RunConfig c;
    std::uint64_t h = 14695981039346656037ULL;
    for (char ch : c.canonical()) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    CHECK(c.hash() == os.str());
}

TEST_CASE("shipped corpora round-trip byte for byte") {
    for (const char* name :
         {"p1xp1.json", "elliptic.json", "completion.json", "completion_missing_fact.json", "empty.json"}) {
        CAPTURE(name);
        std::string text = slurp(name);
        REQUIRE_FALSE(text.empty());
        CHECK(write_corpus(parse_corpus(text)) == text);
    }
}

TEST_CASE("corpus validation rejects malformed input") {
    const std::string base = slurp("p1xp1.json");
    auto rejects = [](const std::string& text) {
        try {
            parse_corpus(text);
        } catch (const Error& e) {
            return e.code() == ErrorCode::schema_invalid;
        }
        return false;
    };
    CHECK(rejects("{"));
    CHECK(rejects("[]"));
    CHECK(rejects(R"({"name": "x"})"));
    CHECK(rejects(R"({"schema_version": 2, "name": "x"})"));
    CHECK(rejects(R"({"schema_version": 1, "name": "x", "extra": 0})"));
    CHECK_FALSE(rejects(R"({"schema_version": 1, "name": "x"})"));

    {
        std::string s = base;  // corrupted multiplicity: breaks degree zero on a curve
        replace_once(s, "\"value\": -1", "\"value\": -2", "\"component\": \"z=inf\"");
        CHECK(rejects(s));
    }
    {
        std::string s = base;  // multiplicity on a component of another variety
        replace_once(s, "\"component\": \"z=0\"", "\"component\": \"t=0\"");
        CHECK(rejects(s));
    }
    {
        std::string s = base;  // unknown field inside a nested object
        replace_once(s, "\"dim\": 2", "\"dim\": 2,\n  \"genus\": 0");
        CHECK(rejects(s));
    }
    {
        std::string s = base;  // symbol entry naming an unregistered factor
        replace_once(s, "\"t\": 1", "\"u\": 1");
        CHECK(rejects(s));
    }
}

TEST_CASE("suites on the shipped corpora") {
    auto p1 = parse_corpus(slurp("p1xp1.json"));
    auto reports = tame_suites(p1);
    CHECK(exit_code(reports) == 0);
    std::size_t tame = 0, higher = 0, squared = 0, recip = 0;
    for (const auto& r : reports) {
        CHECK(r.status == Status::pass);
        tame += r.check_id.rfind("tame/", 0) == 0;
        higher += r.check_id.rfind("higher-tame/", 0) == 0;
        squared += r.check_id.rfind("boundary-squared/", 0) == 0;
        recip += r.check_id.rfind("reciprocity/", 0) == 0;
    }
    CHECK(tame == 3);
    CHECK(higher == 2);
    CHECK(squared == 52);
    CHECK(recip == 100);

    auto empty = tame_suites(parse_corpus(slurp("empty.json")));
    CHECK(empty.size() == 4);
    for (const auto& r : empty) CHECK(r.status == Status::skipped);
    CHECK(exit_code(empty) == 0);

    // a wrong golden fails the suite instead of throwing
    auto broken = p1;
    broken.tame[0].expected.terms.pop_back();
    auto failed = tame_suites(broken);
    CHECK(failed[0].status == Status::fail);
    CHECK_FALSE(failed[0].detail.empty());
    CHECK(exit_code(failed) == 1);
}

TEST_CASE("exit code mapping") {
    CHECK(exit_code(ErrorCode::schema_invalid) == 2);
    CHECK(exit_code(ErrorCode::invalid_argument) == 2);
    CHECK(exit_code(ErrorCode::missing_registry_fact) == 3);
    CHECK(exit_code(ErrorCode::entry_non_convergence) == 1);
}

TEST_CASE("commands: completion, integration cases, surjectivity formats") {
    const std::string dir = TREG_CORPUS_DIR;
    RunConfig cfg;
    auto done = cmd_complete(dir + "/completion.json", "e4-hyperplane", cfg);
    CHECK(done.exit_code == 0);
    CHECK(done.output.find("\"divisor\": []") != std::string::npos);
    CHECK(done.output.find("slice-cancel") != std::string::npos);
    try {
        cmd_complete(dir + "/completion_missing_fact.json", "e4-hyperplane", cfg);
        FAIL("completed without the Bertini fact");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::missing_registry_fact);
        CHECK(std::string(e.what()).find("bertini_curve((a12,a22,a32), (b11,b21,b31))") != std::string::npos);
    }
    CHECK(code_of([&] { cmd_complete(dir + "/completion.json", "nope", cfg); }) == ErrorCode::invalid_argument);

    CHECK(case_golden("disk-unit") == doctest::Approx(3.14159265358979));
    CHECK(code_of([] { case_golden("eta3-f1"); }) == ErrorCode::invalid_argument);
    auto disk = cmd_integrate("disk-unit", cfg, false);
    CHECK(disk.exit_code == 0);
    auto oracle = cmd_integrate("eta1-f2", cfg, true);
    CHECK(oracle.exit_code == 0);
    CHECK(oracle.output.find("quadrature\"") == std::string::npos);

    auto csv = cmd_surjectivity(cfg, Format::csv);
    CHECK(csv.exit_code == 0);
    std::istringstream lines(csv.output);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 5);
    RunConfig loose = cfg;
    loose.tol = 20;
    auto refused = cmd_surjectivity(loose, Format::json);
    CHECK(refused.exit_code == 1);
    CHECK(refused.output.find("contains 0") != std::string::npos);
}
