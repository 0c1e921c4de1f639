#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using supertube::cli::run_cli;
using Json = nlohmann::ordered_json;

namespace {

std::string data(const std::string& name) { return std::string(SUPERTUBE_TEST_DATA) + "/" + name; }

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("super --char on diag(2;3)") {
    const auto r = run({"super", data("diag_2_3.json"), "--char"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["char"]["text"] == "(1+2t)/(1+3t)");
    CHECK(j["char"]["series_matches_supertraces"] == true);
    CHECK(j["seed"] == 1);
    CHECK(j["chunks"] == 64);

    const auto t = run({"super", data("diag_2_3.json"), "--char", "--format", "text"});
    CHECK(t.out.find("(1+2t)/(1+3t)") != std::string::npos);
}

TEST_CASE("super --ber with odd entries") {
    // a = 2, b = 3, off-diagonal xi1 and xi2: 2/3 - xi1 xi2 / 9
    const auto r = run({"super", data("odd_1_1.json"), "--ber"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    const auto& terms = j["ber"]["value"];
    REQUIRE(terms.size() == 2);
    CHECK(terms[0]["gens"].empty());
    CHECK(terms[0]["coeff"] == "2/3");
    CHECK(terms[1]["gens"] == Json::array({1, 2}));
    CHECK(terms[1]["coeff"] == "-1/9");
}

TEST_CASE("super rejects an odd entry in an even block by name") {
    const auto r = run({"super", data("bad_evenness.json"), "--ber"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("(0,0)") != std::string::npos);
    CHECK(r.err.find("M00") != std::string::npos);
}

TEST_CASE("super --berpm and --dual on diag(2;3)") {
    const auto r = run({"super", data("diag_2_3.json"), "--berpm", "--dual"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["berpm"]["ber_plus"] == "2");
    CHECK(j["berpm"]["ber_minus"] == "3");
    CHECK(j["berpm"]["ratio_equals_ber"] == true);
    CHECK(j["dual"][0]["exponent"] == 0);
    CHECK(j["dual"][0]["coeff"] == "2/3");
}

TEST_CASE("zeta on the conic over F_3 with a held-out count") {
    const auto r = run({"zeta", data("conic_f3.json"), "4", "--rational", "1", "1", "--holdout", "1", "--realize"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["counts"] == Json::array({4, 8, 28, 80}));
    CHECK(j["rational"]["text"] == "(1+t)/(1-3t)");
    CHECK(j["holdout"][0]["k"] == 5);
    CHECK(j["holdout"][0]["brute_force"] == 244);
    CHECK(j["holdout_pass"] == true);
    CHECK(j["realization"]["p"] == 1);
    CHECK(j["realization"]["q"] == 1);
}

TEST_CASE("zeta of the zero polynomial in one variable over F_2") {
    const auto r = run({"zeta", data("zero_f2.json"), "4", "--rational", "1", "1"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["rational"]["text"] == "1/(1-2t)");
}

TEST_CASE("zeta input and budget errors") {
    auto r = run({"zeta", data("composite_p.json"), "3"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("not a prime") != std::string::npos);

    r = run({"zeta", data("conic_f3.json"), "12", "--budget", "1000"});
    CHECK(r.code == 3);
    CHECK(r.out.empty());
    CHECK(r.err.find("6561") != std::string::npos);

    // the fit needs K >= pmax + qmax + 2
    r = run({"zeta", data("conic_f3.json"), "3", "--rational", "1", "1"});
    CHECK(r.code == 2);
    r = run({"zeta", data("conic_f3.json"), "3", "--realize"});
    CHECK(r.code == 2);
}

TEST_CASE("tube on the unit sphere") {
    const auto r = run({"tube", data("sphere.json"), "0.25", "--mc", "--samples", "20000"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    const double expect = 4 * 3.14159265358979323846 * 0.75 * 0.75;
    CHECK(j["rows"][0]["polynomial"].get<double>() == doctest::Approx(expect).epsilon(1e-12));
    CHECK(j["rows"][0]["quadrature"].get<double>() == doctest::Approx(expect).epsilon(1e-10));
    CHECK(j["rows"][0].contains("mc_stderr"));
    CHECK(j["rows"][0].contains("tolerance"));
    CHECK(j["samples"] == 20000);

    const auto csv = run({"tube", data("sphere.json"), "0.1,0.25", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("h,polynomial,quadrature", 0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 3);
}

TEST_CASE("tube --weyl on the torus") {
    const auto r = run({"tube", data("torus.json"), "0.2", "1.5", "--weyl"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(std::abs(j["weyl"]["c"][2].get<double>()) < 1e-8);
    CHECK(j["weyl"]["two_sided_identity"][0]["pass"] == true);
    // h = 1.5 is past the focal bound min(r, R - r) = 1
    REQUIRE(j["warnings"].size() == 1);
    CHECK(j["warnings"][0].get<std::string>().find("focal") != std::string::npos);
}

TEST_CASE("tube on a level set reports local identities") {
    const auto r = run({"tube", data("ellipsoid_levelset.json")});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    REQUIRE(j["rows"].size() == 10);
    for (const auto& row : j["rows"]) CHECK(row["eq12_remainder"].get<double>() < 1e-8);
    CHECK(run({"tube", data("ellipsoid_levelset.json"), "--mc"}).code == 2);
}

TEST_CASE("malformed and missing specs") {
    auto r = run({"tube", data("malformed.json"), "0.25"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("malformed.json:2:") != std::string::npos);

    r = run({"super", data("does_not_exist.json")});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
}

TEST_CASE("verify suites") {
    const auto r = run({"verify", "eq12"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["suites"][0]["suite"] == "eq12");
    CHECK(j["suites"][0]["cases"].get<long>() >= 200);

    const auto bad = run({"verify", "no-such-suite"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("eq12") != std::string::npos);
}

TEST_CASE("a tolerance tightened past reach fails verification") {
    const auto r = run({"verify", "eq12", "--tol", "eq12=1e-30"});
    CHECK(r.code == 1);
    CHECK(Json::parse(r.out)["pass"] == false);
    CHECK(run({"verify", "eq12", "--tol", "nonsense=1"}).code == 2);
    CHECK(run({"verify", "eq12", "--tol", "eq12"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "all", "--format", "xml"}).code == 2);
    CHECK(run({"verify", "all", "--workers", "0"}).code == 2);
}

TEST_CASE("reports are reproducible and independent of workers") {
    const std::vector<std::string> base = {"tube", data("sphere.json"), "0.1", "--mc", "--samples", "20000", "--seed", "5"};
    auto with = [&](std::vector<std::string> extra) {
        auto args = base;
        args.insert(args.end(), extra.begin(), extra.end());
        return run(args).out;
    };
    const auto a = with({});
    CHECK(a == with({}));
    CHECK(a == with({"--workers", "3"}));
    CHECK(a != with({"--seed", "6"}));
    const auto z1 = run({"zeta", data("conic_f3.json"), "5"}).out;
    CHECK(z1 == run({"zeta", data("conic_f3.json"), "5", "--workers", "4"}).out);
}

TEST_CASE("--out writes the report to a file") {
    const auto path = std::filesystem::temp_directory_path() / "supertube_cli_report.json";
    std::filesystem::remove(path);
    const auto r = run({"super", data("diag_2_3.json"), "--char", "--out", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    CHECK(Json::parse(in)["char"]["text"] == "(1+2t)/(1+3t)");
    std::filesystem::remove(path);
}
