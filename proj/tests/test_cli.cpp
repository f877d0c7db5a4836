#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "logder/arrangement.hpp"
#include "logder/families.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(LOGDER_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("analyze ziegler:1 as json") {
    RunResult res = run_cli("analyze family:ziegler:1 --json --skip-mingens");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["schema"] == "logder/1");
    CHECK(j["mdr"] == 5);
    CHECK(j["tau"] == 42);
    CHECK(j["n"]["2"] == 18);
    CHECK(j["n"]["3"] == 6);
    CHECK(j["classification"]["primary"] == "Other");
}

TEST_CASE("analyze a223 table output") {
    RunResult res = run_cli("analyze family:a223");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("Free") != std::string::npos);
    CHECK(res.out.find("exp=(1,2,3)") != std::string::npos);
    CHECK(res.out.find("tau:              19") != std::string::npos);
}

TEST_CASE("analyze input errors exit with 2") {
    CHECK(run_cli("analyze /nonexistent/missing.arr").exit_code == 2);
    CHECK(run_cli("analyze family:bogus").exit_code == 2);
    CHECK(run_cli("analyze family:thm100:k=4,j=9").exit_code == 2);
    CHECK(run_cli("analyze family:a223 --mingen-bound 3").exit_code == 2);
}

TEST_CASE("analyze accepts flagged non-essential input") {
    std::string path = "/tmp/logder_test_nonessential.arr";
    {
        std::ofstream out(path);
        out << "1 0 0\n0 1 0\n1 1 0\n";
    }
    RunResult res = run_cli("analyze " + path + " --skip-mingens --json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["essential"] == false);
    CHECK(j["mdr"] == 0);                       // constant relation on a pencil
    CHECK_FALSE(j.contains("classification"));  // refuses non-essential input
    std::remove(path.c_str());
}

TEST_CASE("family emission and round-trip") {
    RunResult res = run_cli("family thm100 --k 4 --j 2");
    REQUIRE(res.exit_code == 0);
    logder::Arrangement a = logder::parse_arrangement(res.out);
    CHECK(a.size() == 9);
    CHECK(a.line(8).coeffs == std::vector<logder::Int>{1, -1, 2});  // x - y + 2z
    CHECK(a == logder::generate_family("thm100", {{"k", 4}, {"j", 2}}));

    RunResult b7 = run_cli("family dminus3 --d 7");
    REQUIRE(b7.exit_code == 0);
    CHECK(logder::parse_arrangement(b7.out).size() == 7);

    RunResult g1 = run_cli("family generic --d 6 --seed 9");
    RunResult g2 = run_cli("family generic --d 6 --seed 9");
    REQUIRE(g1.exit_code == 0);
    CHECK(g1.out == g2.out);  // byte-identical

    CHECK(run_cli("family nosuch").exit_code == 2);
}

TEST_CASE("verify subcommand") {
    RunResult res = run_cli("verify predictor");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("counterexamples: 0") != std::string::npos);
    CHECK(run_cli("verify bogus").exit_code == 2);

    RunResult js = run_cli("verify predictor --json");
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["ok"] == true);
    CHECK(j["counts"]["counterexamples"] == 0);
}

TEST_CASE("compare the ziegler pair") {
    RunResult res = run_cli("compare family:ziegler:1 family:ziegler:2 --json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["same_lattice"] == true);
    CHECK(j["weak_combinatorics_equal"] == true);
    CHECK(j["mdr_a"] == 5);
    CHECK(j["mdr_b"] == 6);
    CHECK(j["same_lattice_different_mdr"] == true);

    RunResult self = run_cli("compare family:triangle family:triangle --json");
    auto js = nlohmann::json::parse(self.out);
    CHECK(js["same_lattice"] == true);
    CHECK(js["mdr_a"] == js["mdr_b"]);
    CHECK(js["same_lattice_different_mdr"] == false);
}

TEST_CASE("compare ziegler extensions through a double point") {
    RunResult res = run_cli(
        "compare family:ziegler:1+genericthrough:double:seed7 "
        "family:ziegler:2+genericthrough:double:seed7 --json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["weak_combinatorics_equal"] == true);
    CHECK(j["mdr_a"] == 6);
    CHECK(j["mdr_b"] == 7);
}

TEST_CASE("golden analyze documents are byte-stable") {
    const std::string golden_dir = LOGDER_GOLDEN_DIR;
    struct Golden {
        const char* spec;
        const char* file;
    } cases[] = {
        {"family:ziegler:1", "ziegler1.json"},
        {"family:a223", "a223.json"},
        {"family:thm100:k=4,j=0", "thm100_k4_j0.json"},
    };
    for (const auto& c : cases) {
        RunResult first = run_cli(std::string("analyze ") + c.spec + " --json");
        REQUIRE(first.exit_code == 0);
        RunResult second = run_cli(std::string("analyze ") + c.spec + " --json");
        CHECK(first.out == second.out);  // identical across runs
        CHECK(first.out == read_file(golden_dir + "/" + c.file));
    }
}
