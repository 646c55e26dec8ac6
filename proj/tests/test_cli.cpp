// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command-line tool: exit codes, JSON reports, and
// determinism. Runs the built binary through std::system.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    json report;
    bool has_report;
};

RunResult run(const std::string& args) {
    const std::string out = std::string(BOCHNER_CLI_PATH) + ".test-out.json";
    std::remove(out.c_str());
    const std::string cmd =
        std::string(BOCHNER_CLI_PATH) + " " + args + " --out " + out + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream f(out);
    r.has_report = static_cast<bool>(f);
    if (r.has_report) f >> r.report;
    return r;
}

int run_plain(const std::string& args) {
    const std::string cmd = std::string(BOCHNER_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string fixture(const std::string& name) {
    return std::string(BOCHNER_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("compute: flat chart has zero Bochner norm") {
    const RunResult r = run("compute --chart flat --point 0,0,0,0");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.has_report);
    CHECK(r.report["results"]["bochner_norm"].get<double>() == 0.0);
    CHECK(r.report["status"] == "ok");
}

TEST_CASE("compute: Fubini-Study is Bochner-flat in the report") {
    const RunResult r = run("compute --chart fubini-study --point 0.1,0.2,-0.1,0.05");
    REQUIRE(r.exit_code == 0);
    const double bn = r.report["results"]["bochner_norm"].get<double>();
    const double cn = r.report["results"]["curvature_norm"].get<double>();
    CHECK(bn <= 1e-6 * cn);
}

TEST_CASE("compute: wrong coordinate count exits 2") {
    CHECK(run_plain("compute --chart flat --point 0,0") == 2);
}

TEST_CASE("compute: out-of-domain point exits 3") {
    CHECK(run_plain("compute --chart complex-hyperbolic --point 0.9,0.9,0.3,0.2") == 3);
}

TEST_CASE("compute: unknown chart exits 2") {
    CHECK(run_plain("compute --chart torus --point 0,0,0,0") == 2);
}

TEST_CASE("check: flat chart passes with all residuals zero") {
    const RunResult r = run("check --chart flat");
    REQUIRE(r.exit_code == 0);
    CHECK(r.report["results"]["max_symmetry_residual"].get<double>() <= 1e-14);
    CHECK(r.report["results"]["max_eq1_residual"].get<double>() <= 1e-14);
}

TEST_CASE("check: random corpus passes at 1e-8") {
    const RunResult r = run("check --random --trials 10 --seed 7 --n 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.report["results"]["max_eq1_residual"].get<double>() <= 1e-8);
    CHECK(r.report["results"]["max_idempotence_residual"].get<double>() <= 1e-9);
}

TEST_CASE("check: empty corpus exits 2") {
    CHECK(run_plain("check --random --trials 0") == 2);
}

TEST_CASE("certify: identity and J fixtures are homotheties with mu = 1") {
    for (const char* name : {"product_identity.map", "product_j.map"}) {
        const RunResult r = run("certify --map " + fixture(name));
        REQUIRE(r.exit_code == 0);
        CHECK(r.report["status"] == "Homothety");
        CHECK(std::abs(r.report["results"]["mu"].get<double>() - 1.0) <= 1e-9);
    }
}

TEST_CASE("certify: non-conformal fixture exits 4") {
    const RunResult r = run("certify --map " + fixture("product_diag21.map"));
    CHECK(r.exit_code == 4);
    CHECK(r.report["status"] == "NotPreserving");
}

TEST_CASE("certify: missing file exits 2") {
    CHECK(run_plain("certify --map /nonexistent.map") == 2);
}

TEST_CASE("constancy: swap fixture gives mu = 1 at all three points") {
    const RunResult r = run("constancy --map " + fixture("swap_diagonal.map"));
    REQUIRE(r.exit_code == 0);
    for (const auto& m : r.report["results"]["mu"])
        CHECK(std::abs(m.get<double>() - 1.0) <= 1e-8);
    CHECK(r.report["results"]["constant"].get<bool>());
}

TEST_CASE("constancy: a single block exits 2") {
    CHECK(run_plain("constancy --map " + fixture("product_identity.map")) == 2);
}

TEST_CASE("reports are byte-stable apart from the timestamp") {
    RunResult a = run("check --random --trials 3 --seed 5 --n 2");
    RunResult b = run("check --random --trials 3 --seed 5 --n 2");
    a.report.erase("timestamp");
    b.report.erase("timestamp");
    CHECK(a.report.dump() == b.report.dump());
}
