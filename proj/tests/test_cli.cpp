#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <umbra/report.hpp>

#include "cli.hpp"
#include "helpers.hpp"

using namespace umbra;
using report::json;

namespace
{

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_path(const std::string &name)
{
    return std::filesystem::temp_directory_path() / ("umbra_cli_test_" + name);
}

} // namespace

TEST_CASE("table output")
{
    auto r = run({"table", "--family", "cauchy", "--n-max", "4", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,value\n0,1\n1,1/2\n2,-1/6\n3,1/4\n4,-19/30\n");

    r = run({"table", "--family", "stirling1", "--n-max", "3"});
    CHECK(r.out == "n,m0,m1,m2,m3\n0,1,,,\n1,0,1,,\n2,0,-1,1,\n3,0,2,-3,1\n");

    r = run({"table", "--family", "mixed", "--r", "0", "--k", "1", "--n-max", "3"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> values;
    std::getline(lines, line);
    CHECK(line == "n,value,polynomial");
    while (std::getline(lines, line)) {
        values.push_back(line.substr(2, line.find(',', 2) - 2));
    }
    CHECK(values == std::vector<std::string>{"1", "1/2", "-1/6", "1/4"});
}

TEST_CASE("table JSON round-trips")
{
    const auto r = run({"table", "--family", "mixed", "--r", "2", "--k", "-1", "--n-max", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["family"] == "mixed");
    CHECK(doc["params"]["k"] == -1);
    REQUIRE(doc["rows"].size() == 6);
    CHECK(report::decode_polynomial(doc["rows"][3]["polynomial"]) == P({"3", "-17/2", "6", "-1"}));
    CHECK(doc["rows"][3]["value"] == "3");
    CHECK(report::dump(json::parse(report::dump(doc))) == r.out);
}

TEST_CASE("LaTeX output")
{
    const auto r = run({"table", "--family", "cauchy", "--n-max", "2", "--format", "latex"});
    CHECK(r.out == "\\begin{tabular}{rl}\nn & value \\\\\n\\hline\n0 & $1$ \\\\\n1 & $\\frac{1}{2}$ \\\\\n"
                   "2 & $-\\frac{1}{6}$ \\\\\n\\end{tabular}\n");
}

TEST_CASE("single polynomials")
{
    CHECK(run({"poly", "--family", "mixed", "--n", "2", "--r", "1", "--k", "1"}).out == "1/6 - 1x + 1x^2\n");
    CHECK(run({"poly", "--family", "mixed", "--n", "0", "--r", "5", "--k", "-2"}).out == "1\n");
    CHECK(run({"poly", "--family", "narumi", "--n", "1", "--r", "2"}).out == "-1 + 1x\n");
    CHECK(run({"poly", "--family", "cauchy", "--n", "4"}).out == "-19/30\n");
    CHECK(run({"poly", "--family", "stirling2", "--n", "5", "--m", "3"}).out == "25\n");
    CHECK(run({"poly", "--family", "frobenius-euler", "--n", "2", "--s", "1", "--lambda", "2"}).out
          == "3 + 2x + 1x^2\n");
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"table", "--family", "nope"}).code == 2);
    CHECK(run({"table", "--family", "cauchy", "--n-max", "x"}).code == 2);
    CHECK(run({"table", "--family", "cauchy", "--n-max", "-1"}).code == 2);
    CHECK(run({"table", "--family", "cauchy", "--format", "xml"}).code == 2);
    CHECK(run({"table", "--family", "frobenius-euler", "--lambda", "1"}).code == 2);
    CHECK(run({"poly", "--family", "stirling1", "--n", "3"}).code == 2);
    CHECK(run({"poly", "--family", "stirling1", "--n", "3", "--m", "4"}).code == 2);
    CHECK(run({"verify", "thm9"}).code == 2);
    CHECK(run({"verify", "thm1", "--r", "3..1"}).code == 2);
    CHECK(run({"verify", "thm1", "--jobs", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    const auto r = run({"table", "--family", "mixed", "--n-max", "40"});
    CHECK(r.code == 2);
    CHECK(r.err.find("requires truncation order >= 40") != std::string::npos);
    CHECK(run({"--trunc", "40", "table", "--family", "cauchy", "--n-max", "40"}).code == 0);
}

TEST_CASE("verify exit codes and reports")
{
    auto r = run({"verify", "thm8", "--n-max", "6", "--r", "0..2", "--k", "-1..2"});
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["identity"] == "THM8");
    CHECK(doc["totals"]["pass"] == 84);

    CHECK(run({"verify", "eq36", "--n-max", "8"}).code == 0);

    r = run({"verify", "thm5", "--n-max", "6"});
    CHECK(r.code == 0);
    const auto suite = json::parse(r.out);
    REQUIRE(suite["reports"].size() == 2);
    CHECK(suite["reports"][0]["passed"] == false);
    CHECK(suite["reports"][1]["passed"] == true);

    // The base reading alone fails.
    CHECK(run({"verify", "thm4", "--n-max", "4", "--r", "1"}).code == 0);
    CHECK(run({"verify", "thm4_variant", "--n-max", "4", "--r", "1"}).code == 0);
    r = run({"verify", "thm4", "--n-max", "4", "--r", "1", "--k", "1"});
    CHECK(json::parse(r.out)["reports"][0]["totals"]["fail"].get<int>() > 0);

    CHECK(run({"verify", "thm1", "--n-max", "40"}).code == 2);
}

TEST_CASE("report files")
{
    const auto one = temp_path("jobs1.json");
    const auto eight = temp_path("jobs8.json");
    CHECK(run({"verify", "all", "--n-max", "5", "--jobs", "1", "--report", one.string()}).code == 0);
    CHECK(run({"verify", "all", "--n-max", "5", "--jobs", "8", "--report", eight.string()}).code == 0);
    CHECK(slurp(one) == slurp(eight));
    CHECK(json::parse(slurp(one))["reports"].size() == 18);
    std::filesystem::remove(one);
    std::filesystem::remove(eight);

    const auto r = run({"verify", "eq36", "--report", "/nonexistent-dir/report.json"});
    CHECK(r.code == 3);
}

TEST_CASE("selftest")
{
    const auto r = run({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.out.find("selftest passed") != std::string::npos);
}
