#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using fuzzylt::cli::run;

namespace
{

const std::string problems = PROBLEMS_DIR;
const std::string oscillating = problems + "/oscillating_y3_minus_y2.json";

struct result {
    int code;
    std::string out;
    std::string err;
};

result call(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string &s)
{
    int n = 0;
    for (char c : s) {
        n += c == '\n';
    }
    return n;
}

fs::path scratch(const std::string &name)
{
    auto p = fs::temp_directory_path() / ("fuzzylt_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("cases")
{
    CHECK(count_lines(call({"cases", "--order", "1"}).out) == 2);
    CHECK(count_lines(call({"cases", "--order", "2"}).out) == 4);
    const auto four = call({"cases", "--order", "4"});
    CHECK(four.code == 0);
    CHECK(count_lines(four.out) == 16);
    CHECK(four.out.rfind("(1)\t1111\t", 0) == 0);
    CHECK(four.out.find("(16)\t2222\t") != std::string::npos);
    CHECK(call({"cases", "--order", "0"}).code == 2);
    CHECK(call({"cases"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
}

TEST_CASE("solve writes one record per case")
{
    const auto dir = scratch("solve");
    const auto r = call({"solve", "--problem", oscillating, "--out", dir.string()});
    REQUIRE(r.code == 0);
    int records = 0;
    for (const auto &e : fs::directory_iterator(dir)) {
        records += e.path().filename().string().rfind("solution_", 0) == 0;
    }
    CHECK(records == 16);
    CHECK(fs::exists(dir / "summary.tsv"));
    CHECK(count_lines(r.out) == 17);
    CHECK(slurp(dir / "summary.tsv") == r.out);
}

TEST_CASE("solve is deterministic")
{
    const auto a = scratch("det_a");
    const auto b = scratch("det_b");
    REQUIRE(call({"solve", "--problem", oscillating, "--out", a.string()}).code == 0);
    REQUIRE(call({"solve", "--problem", oscillating, "--out", b.string()}).code == 0);
    for (const auto &e : fs::directory_iterator(a)) {
        CHECK(slurp(e.path()) == slurp(b / e.path().filename()));
    }
}

TEST_CASE("malformed problem files")
{
    const auto dir = scratch("bad");
    {
        std::ofstream(dir / "short.json") << R"({"order": 4, "coefficients": [0, 0, -1, 1],
            "initial_conditions": [[-1, 0, 1], [1, 2, 3], [2, 3, 4]]})";
        std::ofstream(dir / "broken.json") << "{ not json";
        std::ofstream(dir / "inverted.json") << R"({"order": 1, "coefficients": [1],
            "initial_conditions": [[2, 1, 0]]})";
    }
    const auto r = call({"solve", "--problem", (dir / "short.json").string(), "--out", dir.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("initial_conditions") != std::string::npos);
    CHECK(call({"solve", "--problem", (dir / "broken.json").string(), "--out", dir.string()}).code == 2);
    const auto inv = call({"verify", "--problem", (dir / "inverted.json").string()});
    CHECK(inv.code == 2);
    CHECK(inv.err.find("$.initial_conditions[0]") != std::string::npos);
    CHECK(call({"verify", "--problem", (dir / "missing.json").string()}).code == 2);
    CHECK(call({"bands", "--problem", oscillating, "--case", "11"}).code == 2);
}

TEST_CASE("verify")
{
    const auto ok = call({"verify", "--problem", oscillating, "--case", "1111"});
    CHECK(ok.code == 0);
    CHECK(count_lines(ok.out) == 1 + 11 + 1);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const auto dir = scratch("corrupt");
    REQUIRE(call({"solve", "--problem", oscillating, "--out", dir.string()}).code == 0);
    const auto good = call({"verify", "--problem", oscillating, "--solution", (dir / "solution_1111.json").string(),
                            "--steps", "2000"});
    CHECK(good.code == 0);

    nlohmann::json j;
    std::ifstream(dir / "solution_1111.json") >> j;
    auto &c = j["levels"][3]["lower"][0]["c"];
    c = c.get<double>() + 0.5;
    std::ofstream(dir / "corrupt.json") << j.dump();
    const auto bad = call({"verify", "--problem", oscillating, "--solution", (dir / "corrupt.json").string(),
                           "--steps", "2000"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("verify tolerance sources")
{
    // 50 RK4 steps cannot reach 1e-15.
    CHECK(call({"verify", "--problem", oscillating, "--case", "1111", "--steps", "50", "--tol", "1e-15"}).code == 1);
    ::setenv("FUZZYLT_VERIFY_TOL", "1e-15", 1);
    const int with_env = call({"verify", "--problem", oscillating, "--case", "1111", "--steps", "50"}).code;
    ::setenv("FUZZYLT_VERIFY_TOL", "1", 1);
    const int loose_env = call({"verify", "--problem", oscillating, "--case", "1111", "--steps", "50"}).code;
    ::setenv("FUZZYLT_VERIFY_TOL", "bogus", 1);
    // Unparsable values fall back to the default.
    const int bogus_env = call({"verify", "--problem", oscillating, "--case", "1111"}).code;
    ::unsetenv("FUZZYLT_VERIFY_TOL");
    CHECK(with_env == 1);
    CHECK(loose_env == 0);
    CHECK(bogus_env == 0);
}

TEST_CASE("bands")
{
    const auto r = call({"bands", "--problem", oscillating, "--case", "1111", "--samples", "5"});
    REQUIRE(r.code == 0);
    CHECK(count_lines(r.out) == 1 + 11 * 5);
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "case,r,t,y_lower,y_upper");
    std::getline(is, line);
    CHECK(line.rfind("1111,0,0,", 0) == 0);
    double lo = 0, hi = 0;
    REQUIRE(std::sscanf(line.c_str() + 9, "%lf,%lf", &lo, &hi) == 2);
    CHECK(std::abs(lo + 1) <= 1e-12);
    CHECK(std::abs(hi - 1) <= 1e-12);

    const auto t = call({"bands", "--problem", oscillating, "--case", "2111", "--samples", "11"});
    REQUIRE(t.code == 0);
    CHECK(t.out.find("# truncated at validity_T=") != std::string::npos);
    CHECK(count_lines(t.out) < 1 + 11 * 11 + 1);
}
