#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct RunResult {
    int exit_code;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CYCLO_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

fs::path temp_file(const std::string& stem) {
    return fs::temp_directory_path() / ("cyclo_cli_" + std::to_string(::getpid()) + "_" + stem);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("compute 3 5").exit_code == 2);

    const auto bad_prime = run_cli("compute 4 5 7");
    CHECK(bad_prime.exit_code == 2);
    CHECK(bad_prime.output.find("prime") != std::string::npos);

    CHECK(run_cli("compute 3 5 7 --at 49").exit_code == 2);
    CHECK(run_cli("grid 9").exit_code == 2);
    CHECK(run_cli("verify 4 5 7").exit_code == 2);
    CHECK(run_cli("sweep").exit_code == 2);
    CHECK(run_cli("sweep --pqr-max 10").exit_code == 2);
    CHECK(run_cli("grid 7 --c 0").exit_code == 2);
    CHECK(run_cli("grid 7 --c nonsense").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("compute --help").exit_code == 0);
}

TEST_CASE("compute emits rows and a summary") {
    const auto res = run_cli("compute 3 5 7 --method both");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("n,value\n") == 0);
    CHECK(res.output.find("\n0,1\n") != std::string::npos);
    CHECK(res.output.find("\n7,-2\n") != std::string::npos);
    CHECK(res.output.find("\n48,1\n") != std::string::npos);
    CHECK(res.output.find("# a_plus=1 a_minus=-2 a=2 max_jump=1") != std::string::npos);
    CHECK(res.output.find('\r') == std::string::npos);
}

TEST_CASE("compute --at returns one row") {
    const auto res = run_cli("compute 3 5 7 --method fk --at 7");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "n,value\n7,-2\n");

    const auto both = run_cli("compute 3 5 7 --method both --at 7");
    CHECK(both.exit_code == 0);
}

TEST_CASE("compute json document") {
    const auto res = run_cli("compute 3 5 7 --method both --format json");
    REQUIRE(res.exit_code == 0);
    const Json doc = Json::parse(res.output);
    CHECK(doc["p"] == 3);
    CHECK(doc["deg"] == 48);
    CHECK(doc["coefficients"].size() == 49);
    CHECK(doc["coefficients"][7][0] == 7);
    CHECK(doc["coefficients"][7][1] == -2);
    CHECK(doc["summary"]["a"] == 2);
    CHECK(doc["summary"]["max_jump"] == 1);
}

TEST_CASE("sweep with the smallest product limit") {
    const auto res = run_cli("sweep --pqr-max 105");
    CHECK(res.exit_code == 0);
    CHECK(res.output ==
          "p,q,r,deg,alpha,beta,beta_star,a_plus,a_minus,a,max_jump,bound_new,"
          "bound_bachman,bound_beiter,bound_bang,tight_flag,corollary_s_guarantee,elapsed_ms\n"
          "3,5,7,48,1,2,1,1,-2,2,1,2,2,3,2,true,,0\n");
}

TEST_CASE("sweep covers exactly the triples under the limit") {
    const auto res = run_cli("sweep --pqr-max 1500");
    CHECK(res.exit_code == 0);
    CHECK(count_lines(res.output) == 77); // header + 76 triples
    CHECK(res.output.find("\n5,7,11,") != std::string::npos);
    CHECK(res.output.find("\n3,19,23,") != std::string::npos);
    CHECK(res.output.find("\n3,5,103,") == std::string::npos);
}

TEST_CASE("sweep output is deterministic across runs and worker counts") {
    const auto a = temp_file("sweep_a.csv");
    const auto b = temp_file("sweep_b.csv");
    CHECK(run_cli("sweep --pqr-max 2000 --workers 1 --out " + a.string()).exit_code == 0);
    CHECK(run_cli("sweep --pqr-max 2000 --workers 4 --out " + b.string()).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(fs::exists(a.string() + ".tmp"));

    // CYCLO_WORKERS only affects scheduling, never content
    const auto c = temp_file("sweep_c.csv");
    const std::string env_cmd = "CYCLO_WORKERS=3 " + std::string(CYCLO_BIN) +
                                " sweep --pqr-max 2000 --out " + c.string() + " 2>&1";
    REQUIRE(std::system(env_cmd.c_str()) == 0);
    CHECK(slurp(a) == slurp(c));

    fs::remove(a);
    fs::remove(b);
    fs::remove(c);
}

TEST_CASE("sweep json matches the csv schema") {
    const auto res = run_cli("sweep --pqr-max 1500 --format json");
    REQUIRE(res.exit_code == 0);
    const Json doc = Json::parse(res.output);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 76);
    CHECK(doc[0]["p"] == 3);
    CHECK(doc[0]["q"] == 5);
    CHECK(doc[0]["r"] == 7);
    CHECK(doc[0]["a"] == 2);
    CHECK(doc[0]["tight_flag"] == true);
    CHECK(doc[0]["corollary_s_guarantee"].is_null());
    for (const auto& row : doc) {
        CHECK(row["a"].get<int>() <= row["bound_new"].get<int>());
        CHECK(row["bound_new"].get<int>() <= row["bound_bachman"].get<int>());
        CHECK(row["max_jump"].get<int>() <= 1);
        if (row["p"].get<int>() == 5) {
            // for p=5 the residue-class hypothesis always holds
            CHECK((row["corollary_s_guarantee"] == 3 || row["corollary_s_guarantee"] == 18));
        }
    }
}

TEST_CASE("grid statistics for p=7 and p=199") {
    const auto res = run_cli("grid 7 --c 2/3");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("grid_average: 4/1 (4)") != std::string::npos);
    CHECK(res.output.find("stronger_count: 4 expected 4 of 36 pairs") != std::string::npos);
    CHECK(res.output.find("density c=2/3: 8/9") != std::string::npos);

    const auto big = run_cli("grid 199 --c 2/3 --format json");
    REQUIRE(big.exit_code == 0);
    const Json doc = Json::parse(big.output);
    CHECK(doc["grid_average"] == "100/1");
    CHECK(doc["stronger_count"]["observed"] == 19012); // (199-3)(199-5)/2
    CHECK(doc["densities"][0]["lower_bound"] == "25/27");
}

TEST_CASE("grid full dump") {
    const auto path = temp_file("grid7.csv");
    CHECK(run_cli("grid 7 --out " + path.string()).exit_code == 0);
    const auto body = slurp(path);
    CHECK(body.find("i,j,value\n") == 0);
    CHECK(count_lines(body) == 37); // header + 36 entries
    fs::remove(path);
}

TEST_CASE("verify single triple exhaustively") {
    const auto res = run_cli("verify 3 5 7 --exhaustive");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("all checks passed") != std::string::npos);
    CHECK(res.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify sweep mode") {
    const auto res = run_cli("verify --sweep --pqr-max 2000 --samples 200 --seed 9");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify json document") {
    const auto res = run_cli("verify 3 5 7 --format json --samples 300");
    REQUIRE(res.exit_code == 0);
    const Json doc = Json::parse(res.output);
    CHECK(doc["passed"] == true);
    CHECK(doc["triples"] == 1);
    CHECK(doc["checks"].size() == 12);
    for (const auto& check : doc["checks"]) CHECK(check["failed"] == 0);
}

TEST_CASE("bench asserts agreement") {
    const auto res = run_cli("bench 3 5 7");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("agreement: OK") != std::string::npos);

    const auto sampled = run_cli("bench --pqr-max 50000 --sample 2 --seed 4 --format json");
    REQUIRE(sampled.exit_code == 0);
    const Json doc = Json::parse(sampled.output);
    CHECK(doc.size() == 2);
    for (const auto& row : doc) CHECK(row["agreement"] == true);
}
