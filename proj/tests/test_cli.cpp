#include "finitype/commands.hpp"
#include "finitype/matrix_io.hpp"
#include "finitype/oracle.hpp"

#include "support/oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace finitype;
using finitype::testing::Rng;

namespace {

namespace fs = std::filesystem;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFiles {
public:
    TempFiles() : dir_(fs::temp_directory_path() / ("finitype-cli-" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
    }
    ~TempFiles() { fs::remove_all(dir_); }
    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

private:
    fs::path dir_;
};

const char* const a2 = "2\n0 1\n-1 0\n";
const char* const markov = "3\n0 2 -2\n-2 0 2\n2 -2 0\n";

}  // namespace

TEST_CASE("parse matrices") {
    CHECK(parse_matrix("2\n0 1\n-1 0\n") == SquareIntMatrix{{0, 1}, {-1, 0}});
    CHECK(parse_matrix("# G2\n\n2  # rank\n 0 +1\n\n-3 0 # last\n") == SquareIntMatrix{{0, 1}, {-3, 0}});
    CHECK(parse_matrix("0\n").size() == 0);
    const SquareIntMatrix big = parse_matrix("1\n-123456789012345678901234567890\n");
    CHECK(big(0, 0) == Integer("-123456789012345678901234567890"));
}

TEST_CASE("parse errors carry a line number") {
    const auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_matrix(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("two\n") == 1);
    CHECK(line_of("-1\n") == 1);
    CHECK(line_of("2\n0 1\n") == 3);
    CHECK(line_of("2\n0 1 2\n-1 0\n") == 2);
    CHECK(line_of("2\n0 x\n-1 0\n") == 2);
    CHECK(line_of("2\n0 1\n-1 0\n5 5\n") == 4);
    CHECK(line_of("2 2\n0 1\n-1 0\n") == 1);
    CHECK(line_of("2\n0 1.5\n-1 0\n") == 2);
}

TEST_CASE("format and parse round-trip") {
    Rng rng(401);
    std::uniform_int_distribution<long> entry(-1000, 1000);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng() % 7;
        SquareIntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
        if (n > 0) m(0, 0) = Integer("98765432109876543210") * (trial % 2 ? 1 : -1);
        CHECK(parse_matrix(format_matrix(m)) == m);
    }
}

TEST_CASE("decide exit codes and output") {
    TempFiles tmp;
    const auto fin = tmp.write("a2.mat", a2);
    const auto inf = tmp.write("markov.mat", markov);
    const auto bad = tmp.write("bad.mat", "2\n0 1\n1 0\n");
    const auto garbage = tmp.write("garbage.mat", "2\n0 1\n");

    Run r = run({"decide", fin});
    CHECK(r.code == exit_success);
    CHECK(r.out.rfind("FiniteType", 0) == 0);

    r = run({"decide", inf});
    CHECK(r.code == exit_not_finite);
    CHECK(r.out.rfind("NotFinite", 0) == 0);

    CHECK(run({"decide", bad}).code == exit_input_error);
    CHECK(run({"decide", garbage}).code == exit_input_error);
    CHECK(run({"decide", tmp.write("missing-dir/x.mat", "")}).code == exit_input_error);

    r = run({"decide", "--json", inf});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["verdict"] == "NotFinite");
    CHECK(j["reason"]["kind"] == "CompanionNotPositive");
    CHECK(j["reason"]["minor"] == 2);

    r = run({"decide", "--json", fin, inf});
    CHECK(r.code == exit_not_finite);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> verdicts;
    while (std::getline(lines, line)) verdicts.push_back(nlohmann::json::parse(line)["verdict"]);
    CHECK(verdicts == std::vector<std::string>{"FiniteType", "NotFinite"});

    r = run({"decide", "--json", bad});
    const auto domain = nlohmann::json::parse(r.out);
    CHECK(domain["verdict"] == "NotSkewSymmetrizable");
    CHECK(domain["reason"]["cause"] == "SignRule");
}

TEST_CASE("other subcommands") {
    TempFiles tmp;
    const auto fin = tmp.write("a2.mat", a2);
    const auto inf = tmp.write("markov.mat", markov);
    const auto path = tmp.write("path.mat", "3\n0 1 0\n-1 0 1\n0 -1 0\n");

    Run r = run({"mutate", path, "-k", "2"});
    CHECK(r.code == exit_success);
    CHECK(parse_matrix(r.out) == SquareIntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
    CHECK(run({"mutate", path, "-k", "4"}).code == exit_input_error);
    CHECK(run({"mutate", path, "-k", "0"}).code == exit_input_error);

    r = run({"cycles", inf});
    CHECK(r.code == exit_success);
    CHECK(r.out.find("<1,2,3> Forward") != std::string::npos);

    r = run({"companion", "--json", inf});
    CHECK(r.code == exit_not_finite);
    CHECK(nlohmann::json::parse(r.out)["first_bad_minor"] == 2);

    r = run({"oracle", fin});
    CHECK(r.code == exit_success);
    CHECK(run({"oracle", inf}).code == exit_not_finite);
    CHECK(run({"oracle", path, "--limit", "2"}).code == exit_inconclusive);

    r = run({"compare", inf});
    CHECK(r.code == exit_not_finite);
    CHECK(r.out == "decide: NotFinite; oracle(c): LargeEntryFound; brute-force: None; AGREE\n");
    r = run({"compare", "--json", fin});
    CHECK(r.code == exit_success);
    CHECK(nlohmann::json::parse(r.out)["agreement"] == "AGREE");
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == exit_input_error);
    CHECK(run({"frobnicate"}).code == exit_input_error);
    CHECK(run({"decide"}).code == exit_input_error);
    const Run help = run({"--help"});
    CHECK(help.code == exit_success);
    CHECK(help.out.find("decide") != std::string::npos);
}

TEST_CASE("oracle limit from the environment") {
    ::unsetenv("FINITYPE_ORACLE_LIMIT");
    CHECK(resolve_oracle_limit(0) == default_oracle_limit);
    CHECK(resolve_oracle_limit(7) == 7);
    ::setenv("FINITYPE_ORACLE_LIMIT", "12", 1);
    CHECK(resolve_oracle_limit(0) == 12);
    CHECK(resolve_oracle_limit(7) == 7);
    ::setenv("FINITYPE_ORACLE_LIMIT", "lots", 1);
    CHECK_THROWS_AS(resolve_oracle_limit(0), std::invalid_argument);
    ::unsetenv("FINITYPE_ORACLE_LIMIT");
}
