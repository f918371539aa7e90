#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace {

using nlohmann::json;

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CliResult run_cli(const std::string& args) {
    const std::string out_path = "cli_stdout.txt";
    const std::string err_path = "cli_stderr.txt";
    const std::string cmd =
        std::string(MODRAD_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    CliResult result;
    if (status != -1 && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

}  // namespace

TEST_CASE("cli computes the module radius of a unit column") {
    const CliResult r = run_cli("omega --n 1 --m 2 --entries 1,0");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["command"] == "omega");
    CHECK(doc["config"]["n"] == 1);
    CHECK(doc["config"]["m"] == 2);
    const double value = doc["value"].get<double>();
    const double cert = doc["certificate"].get<double>();
    CHECK(std::abs(value - 0.5) <= cert + 1e-9);
}

TEST_CASE("cli accepts complex entry lists") {
    const CliResult r = run_cli("omega --n 2 --m 2 --entries 1+2i,0,0,1");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    // ||x|| = sqrt(5) for this diagonal, and the radius is half of it.
    const double value = doc["value"].get<double>();
    CHECK(std::abs(value - 0.5 * std::sqrt(5.0)) <= doc["certificate"].get<double>() + 1e-9);
}

TEST_CASE("cli computes the matrix radius") {
    const CliResult r = run_cli("wradius --n 2 --entries 0,2,0,0");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["command"] == "wradius");
    CHECK(std::abs(doc["value"].get<double>() - 1.0) <= doc["certificate"].get<double>() + 1e-9);
}

TEST_CASE("cli emits flat angle profiles") {
    const CliResult r = run_cli("profile --n 1 --m 2 --entries 1,0 --grid-points 128");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    REQUIRE(doc["samples"].is_array());
    CHECK(doc["samples"].size() >= 128);
    CHECK(doc["samples"][0].size() == 2);
    const double spread = doc["spread"].get<double>();
    CHECK(spread <= 1e-9 * (1.0 + doc["max"].get<double>()));
}

TEST_CASE("cli verify runs a filtered suite and reports the config") {
    const CliResult r =
        run_cli("verify --n 2 --m 3 --trials 25 --seed 7 --check norm_axioms,kernel_identities");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["passed"] == true);
    REQUIRE(doc["config"].is_array());
    CHECK(doc["config"][0]["shape"]["n"] == 2);
    CHECK(doc["config"][0]["shape"]["m"] == 3);
    CHECK(doc["config"][0]["trials"] == 25);
    CHECK(doc["config"][0]["master_seed"] == 7);
    REQUIRE(doc["outcomes"].size() == 2);
    for (const auto& outcome : doc["outcomes"]) {
        CHECK(outcome["violations"] == 0);
        CHECK(outcome["trials"] == 25);
    }
}

TEST_CASE("cli verify sweeps the stock shapes when none are given") {
    const CliResult r = run_cli("verify --trials 2 --check norm_sandwich");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["config"].size() == 5);
    CHECK(doc["outcomes"][0]["trials"] == 10);
}

TEST_CASE("cli writes reports to a file when asked") {
    const std::string path = "cli_out_report.json";
    const CliResult r = run_cli("omega --n 1 --m 1 --entries 2 --out " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    const json doc = json::parse(slurp(path));
    CHECK(std::abs(doc["value"].get<double>() - 1.0) <= doc["certificate"].get<double>() + 1e-9);
    std::remove(path.c_str());
}

TEST_CASE("cli usage errors exit with code two") {
    CHECK(run_cli("verify --trials 0").exit_code == 2);
    CHECK(run_cli("omega --n 1 --m 2").exit_code == 2);
    CHECK(run_cli("omega --n 1 --m 2 --entries 1,0,0").exit_code == 2);
    CHECK(run_cli("omega --n 1 --m 2 --entries 1+2j,0").exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    CHECK(run_cli("verify --n 2").exit_code == 2);
    CHECK(run_cli("verify --check nosuchcheck").exit_code == 2);
    CHECK(run_cli("verify --grid-points 4").exit_code == 2);

    const CliResult bad = run_cli("omega --n 1 --m 2 --entries oops,0");
    CHECK(bad.exit_code == 2);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("cli help succeeds") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("omega --help").exit_code == 0);
}
