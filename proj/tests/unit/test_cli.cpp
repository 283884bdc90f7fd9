#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    Run r;
    std::string cmd = std::string(SLTRIV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

nlohmann::json json_of(const std::string& args) {
    Run r = run("--format json " + args);
    return nlohmann::json::parse(r.out);
}

size_t count(const std::string& s, const std::string& what) {
    size_t n = 0;
    for (size_t i = s.find(what); i != std::string::npos; i = s.find(what, i + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("exit codes", "[cli]") {
    CHECK(run("verify --suite table1").code == 0);
    CHECK(run("verify --suite prop3").code == 1);
    CHECK(run("verify --suite nosuch").code == 2);
    CHECK(run("conditions --n 6 --delta 7 --order all").code == 0);
    CHECK(run("h1 --lambda 0 --k 5").code == 0);
    CHECK(run("oracle rank --lambda 1 --k 5").code == 0);
    CHECK(run("oracle crosscheck --id coboundary --trials 5").code == 0);
    CHECK(run("h1 --lambda 1/0 --k 5").code == 2);
    CHECK(run("deform --n 4 --delta alg:1,2").code == 2);
    CHECK(run("deform --n 4 --delta generic --bogus").code == 2);
    CHECK(run("oracle rank --lambda 1 --k 11").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("JSON reports", "[cli]") {
    auto j = json_of("deform --n 7 --delta generic");
    CHECK(j["schema"] == "sltriv.report/1");
    CHECK(j["tool"]["name"] == "sltriv");
    CHECK(j["L2_term_count"] == 6);
    CHECK(j["L2_terms_by_J"]["J6"] == 3);
    CHECK(j["condition_count"] == 3);
    CHECK(j["kill_sets"]["count"] == 13);
    CHECK(j["L2"][0]["rho"] == "(3)/(l^3+6*l^2+8*l)");

    auto h = json_of("h1 --lambda -4 --k 5");
    CHECK(h["dim"] == 1);
    CHECK(h["matches_table"] == true);

    auto c = json_of("conditions --n 7 --delta generic --order 3");
    REQUIRE(c["orders"].size() == 1);
    CHECK(c["orders"][0]["generators"].size() == 2);
}

TEST_CASE("output is byte-identical across runs", "[cli]") {
    for (const char* a : {"deform --n 7 --delta generic", "verify --suite ddzero --trials 5",
                          "conditions --n 8 --delta 5/2 --order all"}) {
        Run x = run(std::string("--format json ") + a), y = run(std::string("--format json ") + a);
        CHECK(x.out == y.out);
        CHECK_FALSE(x.out.empty());
    }
    CHECK(run("--seed 4 oracle crosscheck --id cup --trials 6").out ==
          run("--seed 4 oracle crosscheck --id cup --trials 6").out);
}

TEST_CASE("LaTeX output is balanced", "[cli]") {
    for (const char* a : {"deform --n 7 --delta generic", "conditions --n 10 --delta alg:2,10,3:+:8 --order 2",
                          "h1 --lambda generic --k 6", "verify --suite prop4"}) {
        std::string tex = run(std::string("--format latex ") + a).out;
        CHECK(count(tex, "{") == count(tex, "}"));
        CHECK(count(tex, "\\begin{") == count(tex, "\\end{"));
        CHECK(count(tex, "\\left(") == count(tex, "\\right)"));
        CHECK(tex.find("\\end{document}") != std::string::npos);
    }
}

TEST_CASE("--out writes the report to a file", "[cli]") {
    auto path = std::filesystem::temp_directory_path() / "sltriv_cli_out.json";
    std::filesystem::remove(path);
    Run r = run("--format json --out " + path.string() + " h1 --lambda 0 --k 5");
    CHECK(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(nlohmann::json::parse(ss.str())["dim"] == 1);
    std::filesystem::remove(path);
}
