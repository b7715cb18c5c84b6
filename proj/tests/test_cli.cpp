#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "segal/io.hpp"

using segal::Json;

TEST_SUITE_BEGIN("cli");

namespace {

#ifndef SEGAL_CLI_PATH
#error "SEGAL_CLI_PATH must point at the built binary"
#endif

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(SEGAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/segal_cli_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const std::string kGauss1 = write_temp("gauss1.json", R"({"kind":"gaussian","mean":[0],"cov":[[1]]})");
const std::string kGauss1Bound3 = write_temp(
    "gauss1b.json", R"({"kind":"gaussian","mean":[0],"cov":[[1]],"orderBound":3})");
const std::string kDirac2 = write_temp(
    "dirac2.json", R"({"kind":"discrete","atoms":[{"point":[0,0],"weight":1}]})");
const std::string kCoin = write_temp(
    "coin.json",
    R"({"kind":"discrete","atoms":[{"point":[0],"weight":"1/2"},{"point":[1],"weight":"1/2"}]})");
const std::string kX2 = write_temp(
    "x2.json", R"({"numVars":1,"terms":[{"exp":[2],"num":"1","den":"1"}]})");
const std::string kP2vars = write_temp(
    "p2.json",
    R"({"numVars":2,"terms":[{"exp":[2,0],"num":"1","den":"1"},{"exp":[1,1],"num":"1","den":"3"}]})");
const std::string kSumMap = write_temp(
    "summap.json", R"({"rows":1,"cols":2,"entries":[[{"num":"1","den":"1"},{"num":"1","den":"1"}]]})");
const std::string kMap22 = write_temp(
    "map22.json", R"({"rows":2,"cols":2,"entries":[["1/2","-1"],["2","1/3"]]})");
const std::string kGauss2 = write_temp(
    "gauss2.json", R"({"kind":"gaussian","mean":[0,0],"cov":[[1,0],[0,1]]})");

}  // namespace

TEST_CASE("segal subcommand prints the polynomial") {
    const auto hermite = run_cli("segal --measure " + kGauss1 + " --beta 3");
    CHECK(hermite.exit_code == 0);
    CHECK(hermite.output == "x1^3 - 3*x1\n");

    const auto monomial = run_cli("segal --measure " + kDirac2 + " --beta 2 1");
    CHECK(monomial.exit_code == 0);
    CHECK(monomial.output == "x1^2*x2\n");
}

TEST_CASE("segal subcommand exit codes") {
    CHECK(run_cli("segal --measure " + kGauss1Bound3 + " --beta 2").exit_code == 0);
    CHECK(run_cli("segal --measure " + kGauss1Bound3 + " --beta 3").exit_code == 3);
    CHECK(run_cli("segal --measure /tmp/segal_cli_no_such_file.json --beta 1").exit_code == 2);
    const auto bad = write_temp("bad.json", R"({"kind":"nope"})");
    CHECK(run_cli("segal --measure " + bad + " --beta 1").exit_code == 2);
    // Arity mismatch between beta and the measure dimension.
    CHECK(run_cli("segal --measure " + kGauss1 + " --beta 1 2").exit_code == 2);
}

TEST_CASE("segal emitted json re-parses to the same polynomial") {
    const auto result = run_cli("segal --measure " + kGauss1 + " --beta 4 --format json");
    REQUIRE(result.exit_code == 0);
    const auto parsed = segal::polynomial_from_json(Json::parse(result.output));
    segal::SparsePolynomial expected(1);
    expected.add_term(segal::MultiIndex{4}, 1);
    expected.add_term(segal::MultiIndex{2}, -6);
    expected.add_term(segal::MultiIndex{0}, 3);
    CHECK(parsed == expected);
}

TEST_CASE("wick subcommand") {
    const auto gauss = run_cli("wick --measure " + kGauss1 + " --poly " + kX2);
    CHECK(gauss.exit_code == 0);
    CHECK(gauss.output == "x1^2 - 1\n");

    const auto coin = run_cli("wick --measure " + kCoin + " --poly " + kX2);
    CHECK(coin.exit_code == 0);
    CHECK(coin.output == "x1^2 - x1\n");

    const auto constant = write_temp(
        "one.json", R"({"numVars":1,"terms":[{"exp":[0],"num":"1","den":"1"}]})");
    CHECK(run_cli("wick --measure " + kCoin + " --poly " + constant).output == "1\n");
}

TEST_CASE("wick subcommand with a map checks the robustness identity") {
    const auto result = run_cli("wick --measure " + kGauss2 + " --poly " + kX2 + " --map " +
                                kSumMap + " --format json");
    REQUIRE(result.exit_code == 0);
    const Json j = Json::parse(result.output);
    CHECK(j["robustness"]["ok"] == true);
    const auto wick = segal::polynomial_from_json(j["wick"]);
    segal::SparsePolynomial expected(2);  // (x1+x2)^2 - 2
    expected.add_term(segal::MultiIndex{2, 0}, 1);
    expected.add_term(segal::MultiIndex{1, 1}, 2);
    expected.add_term(segal::MultiIndex{0, 2}, 1);
    expected.add_term(segal::MultiIndex{0, 0}, -2);
    CHECK(wick == expected);
}

TEST_CASE("transform subcommand prints rows and single coefficients") {
    const auto row = run_cli("transform --map " + kSumMap + " --alpha 3 --format json");
    REQUIRE(row.exit_code == 0);
    const Json j = Json::parse(row.output);
    REQUIRE(j["entries"].size() == 4);
    CHECK(j["entries"][0]["beta"] == Json::array({0, 3}));
    CHECK(j["entries"][0]["num"] == "1");
    CHECK(j["entries"][1]["num"] == "3");

    const auto single = run_cli("transform --map " + kSumMap + " --alpha 2 --beta 1 1");
    CHECK(single.exit_code == 0);
    CHECK(single.output == "2\n");

    CHECK(run_cli("transform --map " + kSumMap + " --alpha 1 2").exit_code == 2);
}

TEST_CASE("verify subcommand: passing identities exit 0") {
    CHECK(run_cli("verify transform --measure " + kDirac2 + " --map " + kMap22).exit_code == 0);
    CHECK(run_cli("verify transform --measure " + kGauss2 + " --map " + kSumMap +
                  " --alpha 2").exit_code == 0);
    CHECK(run_cli("verify recurrence --seed 42").exit_code == 0);
    CHECK(run_cli("verify recurrence --map " + kSumMap + " --max-order 3").exit_code == 0);
    CHECK(run_cli("verify multinomial --measure " + kGauss2 + " --c 1 --c 1 --k 2").exit_code == 0);
    CHECK(run_cli("verify robustness --measure " + kGauss2 + " --map " + kSumMap + " --poly " +
                  kX2).exit_code == 0);
    CHECK(run_cli("verify generating --measure " + kCoin + " --map " + kMap22 +
                  " --cols 1 --order 2").exit_code == 2);  // map/measure arity mismatch
    const auto dup = write_temp("dup.json", R"({"rows":2,"cols":1,"entries":[["1"],["1"]]})");
    CHECK(run_cli("verify generating --measure " + kCoin + " --map " + dup +
                  " --order 3").exit_code == 0);
}

TEST_CASE("verify subcommand: bad input exits 2") {
    // A polynomial file where a matrix belongs is a schema error, so the
    // nonlinear counterexample is unrepresentable through this interface.
    CHECK(run_cli("verify robustness --measure " + kGauss2 + " --map " + kX2 + " --poly " +
                  kX2).exit_code == 2);
    CHECK(run_cli("verify robustness --measure " + kGauss2 + " --poly " + kX2).exit_code == 2);
    CHECK(run_cli("verify nonsense").exit_code != 0);
}

TEST_CASE("verify subcommand: insufficient moments exit 3") {
    CHECK(run_cli("verify transform --measure " + kGauss1Bound3 + " --map " +
                  write_temp("id1.json", R"({"rows":1,"cols":1,"entries":[["1"]]})") +
                  " --max-order 4").exit_code == 3);
}

TEST_CASE("demo-wiener emits the riemann report") {
    const auto result = run_cli("demo-wiener --b 1 --l 4 --f1 one --f2 one --format json");
    REQUIRE(result.exit_code == 0);
    const Json j = Json::parse(result.output);
    CHECK(j["identityVerified"] == true);
    CHECK(j["l"] == 4);
    // S(l) = 1/3 + 1/(2l) + 1/(6l^2) for the constant pair.
    CHECK(j["riemannCov"].get<double>() == doctest::Approx(0.46875).epsilon(1e-12));
    CHECK(j["gap"].get<double>() > 0.0);

    const auto big = run_cli("demo-wiener --b 1 --l 64 --format json");
    REQUIRE(big.exit_code == 0);
    const Json jb = Json::parse(big.output);
    CHECK(jb["identityVerified"].is_null());
    CHECK(jb["gap"].get<double>() < 1e-2);
}

TEST_CASE("identical inputs give byte-identical output") {
    const std::string args = "demo-wiener --b 1 --l 8 --f1 tent --f2 hat --format json";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);

    const auto a = run_cli("segal --measure " + kGauss1 + " --beta 4 --format json");
    const auto b = run_cli("segal --measure " + kGauss1 + " --beta 4 --format json");
    CHECK(a.output == b.output);
}

TEST_SUITE_END();
