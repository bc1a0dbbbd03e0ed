#include "cgqed/cli.hpp"

#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <sstream>

using namespace cgqed::cli;

namespace {

struct Out {
    int rc;
    std::string out, err;
};

Out call(const std::vector<std::string>& args) {
    std::ostringstream o, e;
    const int rc = run(args, o, e);
    return {rc, o.str(), e.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
    CHECK(call({}).rc == usage_error);
    CHECK(call({"--help"}).rc == ok);
    CHECK(call({"selfenergy", "--bogus", "1"}).rc == usage_error);
    CHECK(call({"selfenergy", "--mass", "-1"}).rc == usage_error);
    CHECK(call({"selfenergy", "--part", "gauntlike"}).rc == usage_error);
    CHECK(call({"vertex", "--part", "gaunt"}).rc == usage_error);
    CHECK(call({"selfenergy", "--format", "xml"}).rc == usage_error);
    const Out o = call({"selfenergy", "--p0", "1.5"});
    CHECK(o.rc == out_of_domain);
    CHECK(o.out.empty());
    CHECK_FALSE(o.err.empty());
    CHECK(call({"check", "identities", "--expr", "g^mu g^nu g_mu", "--equals", "-2 g^nu"}).rc == check_failed);
    CHECK(call({"check", "identities", "--expr", "g^mu g^nu g_mu", "--equals", "(2 - D) g^nu"}).rc == ok);
    CHECK(call({"check", "identities", "--expr", "g^mu +"}).rc == usage_error);
    CHECK(call({"check", "identities", "--expr", "g^mu", "--equals", "@"}).rc == usage_error);
}

TEST_CASE("selfenergy at rest") {
    const Out o = call({"selfenergy", "--p0", "0", "--px", "0", "--py", "0", "--pz", "0", "--mass", "1", "--part", "total"});
    REQUIRE(o.rc == ok);
    const auto j = nlohmann::json::parse(o.out);
    CHECK(j["units"] == "K");
    CHECK(j["delta"]["basis"]["c_m"].get<double>() == doctest::Approx(1.0));
    CHECK(j["delta"]["basis"]["c_g0p0"].get<double>() == 0.0);
    CHECK(std::abs(j["finite"]["basis"]["c_m"].get<double>()) <= 1e-8);
}

TEST_CASE("alpha scaling") {
    const Out k = call({"selfenergy", "--p0", "0.3"});
    const Out a = call({"selfenergy", "--p0", "0.3", "--alpha", "0.0072973525693"});
    const auto jk = nlohmann::json::parse(k.out), ja = nlohmann::json::parse(a.out);
    CHECK(ja["units"] == "physical");
    CHECK(ja["finite"]["basis"]["c_m"].get<double>() ==
          doctest::Approx(jk["finite"]["basis"]["c_m"].get<double>() * 0.0072973525693 / (4.0 * std::numbers::pi)));
}

TEST_CASE("determinism") {
    const std::vector<std::string> args = {"vertex", "--p0", "0.3", "--px", "0.1", "--pp0", "0.2", "--ppy", "0.1"};
    CHECK(call(args).out == call(args).out);
    const std::vector<std::string> c = {"selfenergy", "--p0", "0.2", "--pz", "0.4", "--format", "csv"};
    CHECK(call(c).out == call(c).out);
}

TEST_CASE("csv layout") {
    for (const char* cmd : {"selfenergy", "vertex"}) {
        const Out o = call({cmd, "--p0", "0.2", "--format", "csv"});
        REQUIRE(o.rc == ok);
        std::istringstream in(o.out);
        std::string head, row;
        std::getline(in, head);
        std::getline(in, row);
        CHECK(head == join_csv(csv_header(cmd)));
        CHECK(std::count(head.begin(), head.end(), ',') == std::count(row.begin(), row.end(), ','));
        CHECK(row.substr(row.size() - 3) == ",ok");
    }
}

TEST_CASE("sweep config") {
    const SweepConfig c = parse_sweep_config("# demo\ncommand = selfenergy\npart = gaunt\np0 = 0, 0.2\npx = 0.1,0.2,0.3\n");
    const auto rows = c.expand();
    REQUIRE(rows.size() == 6);
    CHECK(rows[1].p.t == 0.0);
    CHECK(rows[1].p.x == 0.2);
    CHECK(rows[3].p.t == 0.2);
    CHECK_THROWS_AS(parse_sweep_config("p0 = 1\np0 = 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config("colour = red\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config("p0 = 1, x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config("command = vertex\npart = scalret\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sweep_config("mass = 1\ntol = 0\n"), std::invalid_argument);

    std::ostringstream o, e;
    const int rc = run_sweep(parse_sweep_config("p0 = 0.2, 1.5\n"), o, e);
    CHECK(rc == out_of_domain);
    CHECK(o.str().find(",out_of_domain\n") != std::string::npos);
}

}
