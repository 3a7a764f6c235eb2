#include "hyperasym/cli/cli.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out, err;
    nlohmann::ordered_json json() const { return nlohmann::ordered_json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "hyperasym");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = hyperasym::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

double num(const nlohmann::ordered_json& j) { return std::stod(j.get<std::string>()); }

}  // namespace

TEST_CASE("expand")
{
    Run r = run({"expand", "--a", "1/3", "--b", "5/7", "--branch", "upper", "--terms", "12"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["expansion"]["schema"] == "hyperasym.expansion/1");
    bool k = false, l = false;
    for (const auto& t : j["expansion"]["terms"]) {
        k = k || t["rho"] == "1";
        l = l || t["rho"] == "0";
    }
    CHECK(k);
    CHECK(l);
    CHECK(j["check"]["points"].size() == 3);
    CHECK(num(j["check"]["max_relative_error"]) < 2e-12);
    CHECK(j["check"]["operator_residual"] == "zero");
    // byte-identical output
    CHECK(run({"expand", "--a", "1/3", "--b", "5/7", "--branch", "upper", "--terms", "12"}).out == r.out);
}

TEST_CASE("expand exp and a multiple pole case")
{
    auto j = run({"expand", "--a", "1", "--b", "1"}).json();
    auto terms = j["expansion"]["terms"];
    REQUIRE(terms.size() == 1);
    CHECK(terms[0]["rho"] == "1");
    CHECK(terms[0]["alpha"] == "0");
    CHECK(num(j["check"]["max_relative_error"]) < 1e-40);

    Run r = run({"expand", "--a", "1/4,5/4", "--b", "1/2,2/3"});
    REQUIRE(r.code == 0);
    bool log_term = false;
    auto terms2 = r.json()["expansion"]["terms"];
    for (const auto& t : terms2)
        log_term = log_term || t["logpow"].get<int>() >= 1;
    CHECK(log_term);
}

TEST_CASE("continue")
{
    Run r = run({"continue", "--a", "1,1", "--b", "2", "--terms", "100", "--prec", "40"});
    REQUIRE(r.code == 0);
    auto j = r.json();
    CHECK(j["check"]["oracle"] == "pfaff");
    for (const auto& p : j["check"]["points"])
        CHECK(num(p["relative_error"]) < 1e-25);
    CHECK(j["check"]["operator_residual"] == "zero");
    CHECK_FALSE(j["check"].contains("distinct_case_formula_agrees"));

    j = run({"continue", "--a", "1/2", "--terms", "80", "--prec", "40"}).json();
    CHECK(j["check"]["oracle"] == "binomial");
    CHECK(num(j["check"]["max_relative_error"]) < 1e-25);

    j = run({"continue", "--a", "1/3,1/2", "--b", "3/4"}).json();
    CHECK(j["check"]["distinct_case_formula_agrees"] == true);
}

TEST_CASE("usage errors exit with 2")
{
    Run r = run({"continue", "--a", "1/x", "--b", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("malformed") != std::string::npos);
    CHECK(run({"expand", "--a", "1", "--b", "-1"}).code == 2);
    CHECK(run({"expand", "--a", "1", "--b", "2", "--branch", "left"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "nosuch"}).code == 2);
    CHECK(run({"eval", "Gamma(1/3"}).code == 2);
    CHECK(run({"expand", "--a", "1", "--b", "2", "--lambda", "2"}).code == 2);
}

TEST_CASE("classify")
{
    const std::string s2 = "cyclo(8)[0,1,0,-1]", s2p1 = "cyclo(8)[1,1,0,-1]";
    auto j = run({"classify", "--a", s2p1, "--b", s2}).json();
    CHECK(j["is_E_function"] == true);
    REQUIRE(j["pairing"].size() == 1);
    CHECK(j["pairing"][0][0] == s2p1);
    CHECK(run({"classify", "--a", s2, "--b", "1"}).json()["is_E_function"] == false);
    j = run({"classify", "--a", "1/3", "--b", "5/7"}).json();
    CHECK(j["is_E_function"] == true);
    CHECK(j["pairing"].empty());
}

TEST_CASE("eval")
{
    std::string v30 = run({"eval", "Gamma(1/3)", "--prec", "30"}).json()["value"];
    std::string v40 = run({"eval", "Gamma(1/3)", "--prec", "40"}).json()["value"];
    CHECK(v40.substr(0, 29) == v30.substr(0, 29));
    CHECK(run({"eval", "EulerGamma"}).json()["value"].get<std::string>().rfind("0.57721566490153286060", 0) == 0);
    auto j = run({"eval", "Pi*InvPi"}).json();
    CHECK(j["normal_form"] == "1");
    CHECK(run({"eval", "Pi*InvPi", "--format", "text"}).out.rfind("1.000", 0) == 0);
}

TEST_CASE("precision from the environment")
{
    setenv("HYPERASYM_PREC", "25", 1);
    CHECK(run({"eval", "Pi"}).json()["prec"] == 25);
    CHECK(run({"eval", "Pi", "--prec", "35"}).json()["prec"] == 35);
    unsetenv("HYPERASYM_PREC");
    CHECK(run({"eval", "Pi"}).json()["prec"] == 50);
}

TEST_CASE("verify")
{
    Run r = run({"verify", "identities"});
    CHECK(r.code == 0);
    CHECK(r.json()["status"] == "ok");
    CHECK(run({"verify", "gauss", "--qmax", "6"}).code == 0);
    CHECK(run({"verify", "laplace"}).code == 0);
    Run p = run({"verify", "annihilator", "--form", "printed"});
    CHECK(p.code == 1);
    CHECK(p.json()["reports"][0]["first_failure"] == 2);
    CHECK(run({"verify", "annihilator", "--form", "corrected"}).code == 0);
}

TEST_CASE("output file")
{
    auto path = std::filesystem::temp_directory_path() / "hyperasym_cli_test.json";
    Run r = run({"expand", "--a", "1", "--b", "2", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    auto j = nlohmann::ordered_json::parse(f);
    CHECK(j["command"] == "expand");
    std::filesystem::remove(path);
}
