#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycert/cli.hpp"

using namespace polycert;
using nlohmann::json;

namespace {
struct RunResult {
    int code;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}
} // namespace

TEST_CASE("decompose reproduces the worked example") {
    RunResult r = run({"decompose", "y^3 - x^3*y^2 + x^2*y - x^5 + 1", "--field", "Q", "--json"});
    REQUIRE(r.code == 0);
    json j = r.report();
    CHECK(j.at("command") == "decompose");
    CHECK(j.at("field") == "Q");
    CHECK(j.at("conclusion") == "decomposed");
    const json& sols = j.at("witnesses").at("solutions");
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].at("f") == "x^3");
    CHECK(sols[0].at("r") == "1");
    CHECK(sols[0].at("H") == "x^2 + y^2"); // canonical print, x most significant
}

TEST_CASE("certify-hip refuses positive characteristic with exit 1") {
    RunResult r = run({"certify-hip", "--a", "x^2 - 1", "--c", "y", "--b", "1",
                       "--field", "Fp:5"});
    CHECK(r.code == 1);
    CHECK(r.err.find("CharPositiveUnsupported") != std::string::npos);
}

TEST_CASE("factor with --pow matches the oracle example") {
    RunResult r = run({"factor", "x^2*y + y + 1", "--pow", "2", "--field", "Fp:2", "--json"});
    REQUIRE(r.code == 0);
    json j = r.report();
    CHECK(j.at("conclusion") == "factored");
    const json& factors = j.at("witnesses").at("factors");
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].at("factor") == "x^2*y + y + 1");
    CHECK(factors[0].at("multiplicity") == 2);
}

TEST_CASE("JSON report schema") {
    RunResult r = run({"eisenstein", "y^2 - x", "--q", "x", "--json"});
    REQUIRE(r.code == 0);
    json j = r.report();
    for (const char* key : {"command", "input", "field", "conclusion", "witnesses", "timing-ms"})
        CHECK(j.contains(key));
    CHECK(j.at("conclusion") == "irreducible");
    CHECK(j.contains("certificate")); // replayable unit for `verify`
    CHECK(j.at("certificate").at("criterion") == "eisenstein");
}

TEST_CASE("exit codes") {
    // 1: hypotheses not satisfied / no decomposition.
    CHECK(run({"eisenstein", "y^2 - x^2", "--q", "x"}).code == 1);
    CHECK(run({"decompose", "x*y^2 + y + 1", "--field", "Fp:2"}).code == 1);
    CHECK(run({"decompose", "y^2 + 1", "--allow-constant-f"}).code == 1); // DegenerateFamily
    CHECK(run({"near-separated", "--f1", "x^2 + 1", "--f2", "x^2", "--r", "1"}).code == 1);

    // 2: usage and parse errors.
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"decompose"}).code == 2);                       // missing argument
    CHECK(run({"decompose", "x + 7/0"}).code == 2);            // zero denominator
    CHECK(run({"decompose", "u*y + 1"}).code == 2);            // reserved variable
    CHECK(run({"decompose", "x*y", "--field", "R"}).code == 2);
    CHECK(run({"eisenstein", "y^2 + x", "--q", "x^2 - 1", "--field", "Fp:3"}).code == 2);
    // ^ the claimed prime is cross-checked over finite fields

    // 3: oracle budget.
    CHECK(run({"factor", "x^2*y - x*y^2 + 1", "--field", "Fp:5", "--budget", "3"}).code == 3);

    // 0: help.
    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("decompose") != std::string::npos);
}

TEST_CASE("verify replays emitted certificates") {
    RunResult issued = run({"near-separated", "--f1", "x^3", "--f2", "x", "--r", "2", "--json"});
    REQUIRE(issued.code == 0);
    json cert = issued.report().at("certificate");

    std::string path = "cli_cert_test.json";
    {
        std::ofstream f(path);
        f << cert.dump();
    }
    RunResult ok = run({"verify", path, "--json"});
    CHECK(ok.code == 0);
    CHECK(ok.report().at("conclusion") == "certificate-valid");

    json forged = cert;
    forged["witnesses"]["d2"] = 9;
    {
        std::ofstream f(path);
        f << forged.dump();
    }
    RunResult bad = run({"verify", path});
    CHECK(bad.code == 1);

    {
        std::ofstream f(path);
        f << "{not json";
    }
    CHECK(run({"verify", path}).code == 2);
    std::remove(path.c_str());
    CHECK(run({"verify", path}).code == 2); // missing file
}

TEST_CASE("simple-roots with brute-force cross-check") {
    RunResult r = run({"simple-roots", "(x^2 - 1)^3", "--field", "Fp:3", "--brute", "--json"});
    REQUIRE(r.code == 0);
    json j = r.report();
    CHECK(j.at("witnesses").at("count") == 0);
    CHECK(j.at("witnesses").at("brute-count") == 0);
    CHECK(j.at("witnesses").at("agreement") == true);
}

TEST_CASE("stress output is deterministic for a fixed seed") {
    std::vector<std::string> args = {"stress", "--seed", "7", "--instances", "3",
                                     "--compositions", "2", "--json"};
    RunResult a = run(args);
    RunResult b = run(args);
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    json ja = a.report(), jb = b.report();
    ja.erase("timing-ms");
    jb.erase("timing-ms");
    CHECK(ja == jb);
    unsigned total = ja.at("witnesses").at("irreducible").get<unsigned>() +
                     ja.at("witnesses").at("inconclusive").get<unsigned>();
    CHECK(total == 6);
}
