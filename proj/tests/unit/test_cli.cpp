#include "sev/cli.hpp"
#include "sev/errors.hpp"
#include "sev/json_io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace sev;
using sev::io::json;

namespace {
struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expect = 0) {
    const auto r = run(std::move(args));
    CHECK_MESSAGE(r.code == expect, r.err);
    return json::parse(r.out);
}

const std::string kLu = R"({"space":[3],"degree":[9],"points":[{"mult":6,"count":1},{"mult":4,"count":8}]})";
}  // namespace

TEST_CASE("json round trip and shorthand") {
    const auto sys = io::parse_system_json(kLu);
    CHECK(sys == make_system(3, 9, {{6, 1}, {4, 8}}));
    CHECK(io::system_from_json(io::system_to_json(sys)) == sys);
    CHECK(io::parse_shorthand("P3:d=9:6,4x8") == sys);
    CHECK(io::parse_shorthand("P1xP1:d=2,2:2x3") == make_product_system({1, 1}, {2, 2}, {{2, 3}}));
    CHECK(io::parse_shorthand("P4:d=2") == make_system(4, 2, {}));
    CHECK_THROWS_AS(io::parse_system_json("{not json"), DomainError);
    CHECK_THROWS_AS(io::parse_system_json(R"({"space":[3],"degree":[2]})"), DomainError);
    CHECK_THROWS_AS(io::parse_shorthand("Q3:d=2"), DomainError);
    CHECK(io::int_json(Int("123456789012345678901234567890")) == "123456789012345678901234567890");
    CHECK(io::int_json(Int(-3)) == -3);
}

TEST_CASE("cli dim") {
    CHECK(run_json({"dim", "--system", kLu})["virtual_dim"] == 3);
    CHECK(run_json({"dim", "--system", "P2:d=4:2x5"})["virtual_dim"] == -1);
    CHECK(run_json({"dim", "--system", "P3:d=4"})["virtual_dim"] == 34);
    const auto bad = run({"dim", "--system", "{\"space\":"});
    CHECK(bad.code == cli::kInputError);
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"dim"}).code == cli::kInputError);
    CHECK(run({}).code == cli::kInputError);
    CHECK(run({"frobnicate"}).code == cli::kInputError);
}

TEST_CASE("cli classify") {
    auto j = run_json({"classify", "--system", kLu, "--variety", "quadric"});
    CHECK(j["is_sev"] == true);
    CHECK(j["alpha_max"] == 1);
    j = run_json({"classify", "--system", "P3:d=6:4x3", "--variety", "linear", "--s", "2"});
    CHECK(j["is_sev"] == true);
    CHECK(j["alpha_max"] == 1);
    CHECK(j["nu_residual"] == 25);
    j = run_json({"classify", "--system", "P3:d=3:2x6", "--variety", "rnc"}, cli::kNegative);
    CHECK(j["is_sev"] == false);
    CHECK(run({"classify", "--system", kLu, "--variety", "surface"}).code == cli::kUnsupported);
    j = run_json({"classify", "--system", "P3:d=6:4x3", "--step", "line:0,1:2", "--step", "line:0,2:2", "--step",
                  "line:1,2:2"});
    CHECK(j["is_sev"] == true);
    CHECK(j.contains("seed"));
    CHECK(j.contains("prime"));
}

TEST_CASE("cli h1check and oracle") {
    auto j = run_json({"h1check", "--system", kLu, "--variety", "quadric"});
    CHECK(j["cohomologically_special"] == true);
    CHECK(j["seed"] == oracle::kDefaultSeed);
    j = run_json({"oracle", "--system", kLu, "--cross"});
    CHECK(j["h0"] == 5);
    CHECK(j["agreed"] == true);
    j = run_json({"oracle", "--system", "P3:d=6:4x3", "--line-scheme", "0,1:2", "--line-scheme", "0,2:2",
                  "--line-scheme", "1,2:2"});
    CHECK(j["h0"] == 27);
    j = run_json({"oracle", "--system", "P3:d=4:2x9", "--prime", "1000000007", "--seed", "0x10"});
    CHECK(j["h0"] == 1);
    CHECK(j["h1"] == 2);
    CHECK(j["prime"] == 1000000007u);
    CHECK(j["seed"] == 16);
    CHECK(run({"oracle", "--system", kLu, "--prime", "1000000008"}).code == cli::kInputError);
}

TEST_CASE("cli determinism and SEV_SEED") {
    const std::vector<std::string> args{"oracle", "--system", "P3:d=5:2x10"};
    CHECK(run(args).out == run(args).out);
    setenv("SEV_SEED", "99", 1);
    const auto j = run_json(args);
    unsetenv("SEV_SEED");
    CHECK(j["seed"] == 99);
}

TEST_CASE("cli scan and verify") {
    const auto csv = run({"scan", "rnc", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "space,multidegree,variety_degree,h,note\nP2,\"(4)\",\"(2)\",5,\"nu=0\"\nP4,\"(3)\",\"(4)\",7,\"nu=0\"\n");
    CHECK(run({"scan", "rnc", "--format", "md"}).out.rfind("| space |", 0) == 0);
    CHECK(run({"scan", "planes"}).code == cli::kInputError);
    auto j = run_json({"verify", "lemmas"});
    CHECK(j["pass"] == true);
    j = run_json({"verify", "paper-tables"});
    CHECK(j["pass"] == true);
    CHECK(run({"verify", "nothing"}).code == cli::kInputError);
    const auto md = run({"verify", "lemmas", "--format", "md"});
    CHECK(md.out.find("| rising_identity | pass |") != std::string::npos);
}
