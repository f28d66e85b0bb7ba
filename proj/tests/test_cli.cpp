#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef CURVEDIM_CLI_PATH
#define CURVEDIM_CLI_PATH "curvedim"
#endif
#ifndef CURVEDIM_SOURCE_DIR
#define CURVEDIM_SOURCE_DIR "."
#endif

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CURVEDIM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) {
    return std::string(CURVEDIM_SOURCE_DIR) + "/tests/data/" + name;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(CURVEDIM_SOURCE_DIR) + "/tests/golden/" + name);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("analyze matches the golden report") {
    RunResult r = run_cli("analyze --curve " + data("cuspidal_cubic_affine.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("analyze_cuspidal_cubic.json"));
}

TEST_CASE("decide on the nodal cubic matches the golden report") {
    RunResult r = run_cli("decide --curve " + data("nodal_cubic_projective.json") +
                          " --openset " + data("openset_p0_boundary.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("decide_nodal_boundary.json"));
    json rep = json::parse(r.out);
    CHECK(rep["verdict"]["verdict"] == "finite");
    CHECK(rep["verdict"]["exact_dim"] == 1);
}

TEST_CASE("decide on the unicuspidal quartic") {
    RunResult boundary = run_cli("decide --curve " + data("unicuspidal_m3.json") +
                                 " --openset " + data("openset_p0_boundary.json"));
    CHECK(boundary.exit_code == 0);
    CHECK(json::parse(boundary.out)["verdict"]["exact_dim"] == 3);

    RunResult interior = run_cli("decide --curve " + data("unicuspidal_m3.json") +
                                 " --openset " + data("openset_p0_interior.json"));
    CHECK(interior.exit_code == 0);
    CHECK(json::parse(interior.out)["verdict"]["exact_dim"] == 1);

    RunResult infinite = run_cli("decide --curve " + data("unicuspidal_m3.json") +
                                 " --openset " + data("openset_nonpolar.json"));
    CHECK(infinite.exit_code == 0);
    CHECK(json::parse(infinite.out)["verdict"]["verdict"] == "infinite");
}

TEST_CASE("l2delta of the glued curves") {
    RunResult r = run_cli("l2delta --curve " + data("glued_n4_k2.json") + " --openset " +
                          data("openset_glued.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("l2delta_glued_n4_k2.json"));
    json rep = json::parse(r.out);
    CHECK(rep["l2_delta"]["value"] == 2);

    RunResult r2 = run_cli("l2delta --curve " + data("glued_n2_k5.json") + " --openset " +
                           data("openset_glued.json"));
    CHECK(r2.exit_code == 0);
    CHECK(json::parse(r2.out)["l2_delta"]["value"] == 2); // min{5, 2}
}

TEST_CASE("reports are byte-identical across runs") {
    RunResult a = run_cli("analyze --curve " + data("nodal_cubic_projective.json"));
    RunResult b = run_cli("analyze --curve " + data("nodal_cubic_projective.json"));
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("exit code 2 on malformed input") {
    CHECK(run_cli("analyze --curve " + data("malformed.json")).exit_code == 2);
    CHECK(run_cli("analyze --curve " + data("openset_nonpolar.json")).exit_code == 2);
}

TEST_CASE("exit code 3 on loci that leave Q") {
    RunResult r = run_cli("analyze --curve " + data("smooth_conic_affine.json"));
    CHECK(r.exit_code == 3);
}

TEST_CASE("exit code 4 on an unclassified point") {
    RunResult r = run_cli("decide --curve " + data("nodal_cubic_projective.json") +
                          " --openset " + data("openset_empty.json"));
    CHECK(r.exit_code == 4);
}

TEST_CASE("exit code 5 when an exact dimension is demanded but unavailable") {
    // Build the CPS configuration on the fly; only bounds are available.
    json doc = {{"schema", "1"},
                {"ambient", "affine"},
                {"mode", "parametrized"},
                {"degree", 36},
                {"parametrized", {{"plane", true}, {"points", json::array()}}}};
    json classes = json::object();
    for (int i = 0; i < 375; ++i) {
        std::string id = "c" + std::to_string(i);
        doc["parametrized"]["points"].push_back(
            {{"id", id},
             {"branches", {{{"components", {{{"2", "1"}}, {{"3", "1"}}}}}}}});
        classes[id] = "boundary";
    }
    for (int i = 0; i < 36; ++i) {
        std::string id = "h" + std::to_string(i);
        doc["parametrized"]["points"].push_back(
            {{"id", id},
             {"at_infinity", true},
             {"branches", {{{"components", {{{"1", "1"}}, {{"1", "1"}}}}}}}});
    }
    std::string curve_path = "/tmp/curvedim_cps_curve.json";
    std::string openset_path = "/tmp/curvedim_cps_openset.json";
    {
        std::ofstream out(curve_path);
        out << doc.dump();
        std::ofstream oout(openset_path);
        oout << json{{"schema", "1"}, {"complement", "locally_polar"}, {"classes", classes}}.dump();
    }

    RunResult bounds = run_cli("decide --curve " + curve_path + " --openset " + openset_path);
    CHECK(bounds.exit_code == 0);
    json rep = json::parse(bounds.out);
    CHECK(rep["verdict"]["lower_bound"] == 84);
    CHECK(rep["verdict"]["genus"] == 220);
    CHECK(rep["divisors"]["affine_multiplicity"]["degree"] == 303);

    RunResult exact = run_cli("decide --exact --curve " + curve_path + " --openset " + openset_path);
    CHECK(exact.exit_code == 5);
}

TEST_CASE("exit code 6 on an unattainable numeric tolerance") {
    RunResult r = run_cli("verify --config " + data("verify_strict.json"));
    CHECK(r.exit_code == 6);
    json rep = json::parse(r.out);
    CHECK(rep["all_passed"] == false);
}

TEST_CASE("verify passes at the default configuration") {
    RunResult r = run_cli("verify --config " + data("verify_default.json"));
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["all_passed"] == true);
}

TEST_CASE("--out writes the report to a file") {
    std::string out_path = "/tmp/curvedim_out_test.json";
    std::remove(out_path.c_str());
    RunResult r = run_cli("analyze --curve " + data("cuspidal_cubic_affine.json") + " --out " +
                          out_path);
    CHECK(r.exit_code == 0);
    std::ifstream in(out_path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    CHECK(os.str() == golden("analyze_cuspidal_cubic.json"));
}
