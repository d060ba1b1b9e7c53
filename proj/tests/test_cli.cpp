#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "oforge/cli.hpp"
#include "oforge/textio.hpp"
#include "oforge/variables.hpp"

using namespace oforge;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("omega apply") {
    auto r = run({"omega", "--n", "2", "--apply", "x11*x22 - x12*x21"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");

    auto r1 = run({"omega", "--n", "2", "--apply", "1"});
    CHECK(r1.code == 0);
    CHECK(r1.out == "0\n");

    auto r2 = run({"omega", "--n", "2", "--apply", "x11*x22^2 - x12*x21*x22", "--power", "1"});
    CHECK(r2.code == 0);
    CHECK(r2.out == "3*x22\n");

    auto r3 = run({"omega", "--n", "3", "--apply",
                   "x11*x22*x33 - x11*x23*x32 - x12*x21*x33 + x12*x23*x31 + x13*x21*x32 - "
                   "x13*x22*x31"});
    CHECK(r3.code == 0);
    CHECK(r3.out == "6\n");
}

TEST_CASE("omega constants") {
    auto r = run({"omega", "--n", "2", "--constants", "3", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 2);
    CHECK(j["alphas"][0][1] == "2");
    CHECK(j["alphas"][1][1] == "6");
    CHECK(j["alphas"][2][1] == "12");
    CHECK(j["cs"][1][1] == "12");
}

TEST_CASE("invariants: quadratic report") {
    auto r = run({"invariants", "--form-degree", "2", "--bound", "4", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["all_agree"] == true);
    REQUIRE(j["generators"].size() == 1);
    CHECK(j["generators"][0][0] == 2);

    // emitted polynomials re-parse in the coefficient ring
    AmbientPtr coeff = make_ambient({VariableSet::form_coeffs(3)});
    Polynomial g = parse_polynomial(j["generators"][0][1].get<std::string>(), coeff);
    CHECK(!g.is_zero());

    // degree table shape
    CHECK(j["degrees"].size() == 4);
    CHECK(j["degrees"][1]["oracle_dim"] == 1);
    CHECK(j["degrees"][1]["agreement"] == true);
}

TEST_CASE("invariants: linear form finds nothing") {
    auto r = run({"invariants", "--form-degree", "1", "--bound", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("no integral weight") != std::string::npos);
}

TEST_CASE("invariants: cap refusal") {
    setenv("OMEGA_FORGE_CAP", "10", 1);
    auto r = run({"invariants", "--form-degree", "4", "--bound", "3"});
    unsetenv("OMEGA_FORGE_CAP");
    CHECK(r.code == 1);
    CHECK(r.err.find("refused") != std::string::npos);
    CHECK(r.err.find("OMEGA_FORGE_CAP") != std::string::npos);
}

TEST_CASE("weights reports") {
    auto r = run({"weights", "--n", "2", "--box", "3", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["saturation_ok"] == true);
    CHECK(j["ideal_ok"] == true);
    CHECK(j["polynomial_dominant_weights"].size() == 10);

    auto r0 = run({"weights", "--n", "2", "--box", "0", "--format", "json"});
    auto j0 = nlohmann::json::parse(r0.out);
    REQUIRE(j0["polynomial_dominant_weights"].size() == 1);
    CHECK(j0["polynomial_dominant_weights"][0] == nlohmann::json::array({0, 0}));

    auto rf = run({"weights", "--n", "2", "--box", "2", "--family", "det", "--format", "json"});
    auto jf = nlohmann::json::parse(rf.out);
    CHECK(jf["proper_in_truncation"] == true);
    bool saw_free = false, saw_zero = false;
    for (const auto& e : jf["coefficient_family"]) {
        if (e[1] == "free") saw_free = true;
        if (e[1] == "forced-zero") saw_zero = true;
    }
    CHECK(saw_free);
    CHECK(saw_zero);
}

TEST_CASE("verify runs and is deterministic") {
    auto a = run({"verify", "--n", "2", "--seed", "7", "--samples", "5", "--max-form-degree", "2",
                  "--max-sym-power", "2"});
    CHECK(a.code == 0);
    CHECK(a.out.find("all properties pass") != std::string::npos);
    auto b = run({"verify", "--n", "2", "--seed", "7", "--samples", "5", "--max-form-degree", "2",
                  "--max-sym-power", "2"});
    CHECK(a.out == b.out);

    auto c = run({"verify", "--n", "2", "--seed", "8", "--samples", "5", "--max-form-degree", "2",
                  "--max-sym-power", "2"});
    CHECK(c.code == 0);
}

TEST_CASE("verify fault injection is detected") {
    auto r = run({"verify", "--n", "2", "--seed", "7", "--samples", "3", "--max-form-degree", "2",
                  "--max-sym-power", "2", "--inject-fault", "first-rule"});
    CHECK(r.code == 2);
    CHECK(r.out.find("[FAIL] first-rule") != std::string::npos);
    CHECK(r.out.find("residual") != std::string::npos);
}

TEST_CASE("output to file") {
    std::string path = "cli_test_weights.json";
    auto r = run({"weights", "--n", "2", "--box", "2", "--format", "json", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    auto j = nlohmann::json::parse(buf.str());
    CHECK(j["polynomial_dominant_weights"].size() == 6);
    CHECK(j["monoid_cone_generators"].size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("usage errors") {
    auto r = run({"omega", "--n", "2", "--apply", "x11 + qq"});
    CHECK(r.code == 1);
    CHECK(r.err.find("parse error") != std::string::npos);

    auto r2 = run({"nosuchcommand"});
    CHECK(r2.code == 1);

    auto r3 = run({"invariants", "--form-degree", "2"});
    CHECK(r3.code == 1);  // missing --bound

    auto r4 = run({"omega", "--n", "2"});
    CHECK(r4.code == 1);  // nothing to do
}
