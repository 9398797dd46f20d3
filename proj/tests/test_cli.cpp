#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oplat/cli.hpp"

using namespace oplat;

namespace {

const char* kT1File = R"({
  "field": "Q",
  "matrix": [["0","1","0","1"],["0","0","1","1"],["0","0","1","1"],["0","0","1","1"]],
  "nest": {"type": "coordinate", "dims": [1, 2, 3]}
})";

const char* kT2File = R"({
  "matrix": [["0","1","0","1"],["0","0","1","1"],["0","0","1","2"],["0","0","1","1"]],
  "nest": {"type": "coordinate", "dims": [1, 2, 3]}
})";

json checks_by_name(const json& report, const std::string& name) {
    for (const auto& c : report.at("checks"))
        if (c.at("name") == name) return c;
    return {};
}

}  // namespace

TEST_CASE("kernel-set command reproduces the reference kernel set") {
    CommandResult r = run_command("kernel-set", kT1File);
    CHECK(r.exit_code == 0);
    const json& results = r.report.at("results");
    CHECK(results.at("rank") == 2);
    CHECK(results.at("kernel_set").size() == 3);
    CHECK(results.at("kernel_set")[0].at("p") == json::array({json::array({"1", "0", "0", "0"})}));
    CHECK(results.at("kernel_set")[2].at("q") == json::array());
    CHECK(checks_by_name(r.report, "cardinality_bound").at("pass") == true);
    CHECK(checks_by_name(r.report, "totally_ordered").at("mandatory") == true);

    CommandResult r2 = run_command("kernel-set", kT2File);
    CHECK(r2.report.at("results").at("rank") == 3);
    CHECK(r2.report.at("results").at("kernel_set") == results.at("kernel_set"));
}

TEST_CASE("reports are byte-identical across runs") {
    std::string a = run_command("kernel-set", kT1File).report.dump();
    std::string b = run_command("kernel-set", kT1File).report.dump();
    CHECK(a == b);
    CHECK(a.find("\"inputs_digest\":\"fnv1a64:") != std::string::npos);
}

TEST_CASE("kernel-set of the zero operator") {
    const char* file = R"({
      "matrix": [["0","0"],["0","0"]],
      "nest": {"type": "coordinate", "dims": [1]}
    })";
    CommandResult r = run_command("kernel-set", file);
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("results").at("kernel_set").size() == 1);
    CHECK(r.report.at("results").at("kernel_set")[0].at("p").size() == 2);  // full space
}

TEST_CASE("lattice input monitors the bound without asserting it") {
    const char* file = R"({
      "matrix": [["1","0"],["0","1"]],
      "lattice": {"type": "explicit", "subspaces": [[["1","0"]], [["0","1"]]]}
    })";
    CommandResult r = run_command("kernel-set", file);
    CHECK(r.exit_code == 0);
    json monitor = checks_by_name(r.report, "cardinality_bound_monitor");
    CHECK(monitor.at("mandatory") == false);
}

TEST_CASE("input errors are detected") {
    CHECK_THROWS_AS(run_command("kernel-set", "not json"), InputError);
    CHECK_THROWS_AS(run_command("kernel-set", "{}"), InputError);
    CHECK_THROWS_AS(run_command("nope", "{}"), InputError);
    // 3x3 operator against a 4-dimensional explicit nest element.
    const char* mismatched = R"({
      "matrix": [["1","0","0"],["0","1","0"],["0","0","1"]],
      "nest": {"type": "explicit", "subspaces": [[["1","0","0","0"]]]}
    })";
    CHECK_THROWS_AS(run_command("kernel-set", mismatched), InputError);
    // Ragged matrix rows.
    CHECK_THROWS_AS(run_command("kernel-set", R"({"matrix": [["1"],["1","2"]]})"), InputError);
    // Imaginary entry while the field says plain rationals.
    const char* complex_q = R"({
      "field": "Q",
      "matrix": [["i","0"],["0","1"]],
      "nest": {"type": "coordinate", "dims": [1]}
    })";
    CHECK_THROWS_AS(run_command("kernel-set", complex_q), InputError);
}

TEST_CASE("explicit nest input") {
    const char* file = R"({
      "matrix": [["0","1","1"],["0","0","1"],["0","0","0"]],
      "nest": {"type": "explicit", "subspaces": [
        [["1","0","0"]],
        [["1","0","0"],["0","1","0"]]
      ]}
    })";
    CommandResult r = run_command("kernel-set", file);
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("results").at("kernel_map").size() == 4);

    // Elements that fail to form a chain are rejected for nests.
    const char* crossed = R"({
      "matrix": [["0","1"],["0","0"]],
      "nest": {"type": "explicit", "subspaces": [[["1","0"]], [["1","1"]]]}
    })";
    CHECK_THROWS_AS(run_command("kernel-set", crossed), InputError);
}

TEST_CASE("gaussian field input works end to end") {
    const char* file = R"({
      "field": "Qi",
      "matrix": [["0","1/2+1/3i"],["0","0"]],
      "nest": {"type": "coordinate", "dims": [1]}
    })";
    CommandResult r = run_command("kernel-set", file);
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("results").at("field") == "Qi");
    CHECK(r.report.at("results").at("rank") == 1);
}

TEST_CASE("decompose command") {
    CommandResult r = run_command("decompose", kT2File);
    CHECK(r.exit_code == 0);
    const json& results = r.report.at("results");
    CHECK(results.at("term_count").get<int>() <= 6);  // k * rank = 2 * 3
    CHECK(results.at("slice_count") == 2);
    CHECK(checks_by_name(r.report, "terms_sum_to_operator").at("pass") == true);
    CHECK(checks_by_name(r.report, "annihilator_ceiling_identity").at("mandatory") == false);

    // decompose requires a nest, not a general lattice.
    const char* lattice_only = R"({
      "matrix": [["0","1"],["0","0"]],
      "lattice": {"type": "coordinate", "dims": [1]}
    })";
    CHECK_THROWS_AS(run_command("decompose", lattice_only), InputError);
}

TEST_CASE("bil command") {
    const char* file = R"({
      "matrix": [["0","1"],["0","0"]],
      "nest": {"type": "coordinate", "dims": [1]}
    })";
    CommandResult r = run_command("bil", file);
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("results").at("count") == 8);
    CHECK(checks_by_name(r.report, "closed_under_join_meet").at("pass") == true);
}

TEST_CASE("lie-closure command on the 6x6 corner fixture") {
    auto unit6 = [](int ui, int uj) {
        json m = json::array();
        for (int i = 0; i < 6; ++i) {
            json row = json::array();
            for (int j = 0; j < 6; ++j) row.push_back(i == ui && j == uj ? "1" : "0");
            m.push_back(row);
        }
        return m;
    };
    json file;
    file["field"] = "Q";
    file["generators"] = json::array({unit6(5, 4)});
    file["matrix"] = unit6(5, 5);  // probe: E66 must stay outside
    file["nest"] = {{"type", "coordinate"}, {"dims", {1, 2, 3, 4, 5}}};
    CommandResult r = run_command("lie-closure", file.dump());
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("results").at("module_dim") == 11);
    CHECK(r.report.at("results").at("algebra_dim") == 21);
    CHECK(r.report.at("results").at("contains_matrix") == false);
    CHECK(checks_by_name(r.report, "bracket_closure").at("pass") == true);
}

TEST_CASE("decomposable command on the scalar ideal") {
    const char* file = R"({
      "matrix": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]],
      "generators": [[["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]],
      "nest": {"type": "coordinate", "dims": [1, 2, 3]},
      "seed": 7,
      "samples": 16
    })";
    CommandResult r = run_command("decomposable", file);
    CHECK(r.exit_code == 0);
    const json& results = r.report.at("results");
    CHECK(results.at("status") == "NOT_DECOMPOSABLE");
    CHECK(results.at("seed") == 7);
    CHECK(results.at("samples") == 16);
    CHECK(results.at("witness").empty());

    // Explicit option overrides the file's seed.
    CliOptions options;
    options.seed = 99;
    CommandResult r2 = run_command("decomposable", file, options);
    CHECK(r2.report.at("results").at("seed") == 99);
}

TEST_CASE("decomposable rejects operators outside the module") {
    const char* file = R"({
      "matrix": [["0","1"],["0","0"]],
      "generators": [[["1","0"],["0","1"]]],
      "nest": {"type": "coordinate", "dims": [1]}
    })";
    CHECK_THROWS_AS(run_command("decomposable", file), InputError);
}

TEST_CASE("check-invariants command") {
    CommandResult r = run_command("check-invariants", R"({"seed": 1, "samples": 4})");
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("results").at("properties").size() >= 15);
    for (const auto& c : r.report.at("checks")) CHECK(c.at("pass") == true);

    std::string again = run_command("check-invariants", R"({"seed": 1, "samples": 4})")
                            .report.dump();
    CHECK(again == r.report.dump());
}
