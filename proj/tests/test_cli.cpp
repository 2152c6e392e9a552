// End-to-end checks of the installed binary: flag parsing, artifact formats,
// and the exit-code contract (0 pass, 1 usage/IO, 2 fail, 3 inconclusive).

#include <catch_amalgamated.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

using json = nlohmann::json;
using Catch::Approx;

namespace {

struct RunResult {
  int exit_code;
  std::string out_file_contents;
};

RunResult run_cli(const std::string& args, const std::string& out_path) {
  std::string cmd = std::string(GFT_CLI_BINARY) + " " + args;
  if (!out_path.empty()) cmd += " --out " + out_path;
  cmd += " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, ""};
  if (!out_path.empty()) {
    std::ifstream is(out_path);
    std::stringstream ss;
    ss << is.rdbuf();
    r.out_file_contents = ss.str();
  }
  return r;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/gft_cli_test_") + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  os << text;
}

const char* kHalfPlaneScenario = R"({
  "fs": [{"catalog": "half_plane", "class": {"tag": "lif", "parameter": 1.0}}],
  "gammas": [[2.0, 0.0]],
  "gs": [], "lambdas": [],
  "M": 2.0, "N": 0.0
})";

}  // namespace

TEST_CASE("radius subcommand") {
  const std::string out = temp_path("radius.json");
  RunResult r = run_cli("radius --formula thm21 --alpha 1 --M 1", out);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out_file_contents);
  CHECK(j["radius"].get<double>() == Approx(1.0 / 3.0).margin(1e-15));
  CHECK(j["formula"] == "thm21");
  CHECK(j["quadratic"][0].get<double>() == -3.0);
}

TEST_CASE("radius subcommand covers every formula") {
  const std::string out = temp_path("radius_all.json");
  for (const std::string f :
       {"thm21", "cor_convex", "thm22", "thm23", "thm24", "cor25", "thm26"}) {
    RunResult r = run_cli(
        "radius --formula " + f + " --alpha 1.5 --beta 0.5 --xi 0.25 --M 1.2 --N 0.6",
        out);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out_file_contents);
    CHECK(j["radius"].get<double>() > 0.0);
    CHECK(j["radius"].get<double>() <= 1.0);
    CHECK(j["quadratic"].size() == 3);
    CHECK(j.contains("discriminant"));
  }
}

TEST_CASE("sweep subcommand emits the expected CSV") {
  const std::string out = temp_path("sweep.csv");
  RunResult r = run_cli("sweep --formula thm23 --beta 1 --M 0.5:2.0:0.5", out);
  REQUIRE(r.exit_code == 0);
  std::istringstream is(r.out_file_contents);
  std::string line;
  std::getline(is, line);
  CHECK(line == "param,radius,quadratic_a,quadratic_b,quadratic_c");
  std::vector<double> radii;
  while (std::getline(is, line)) {
    std::istringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');  // param
    std::getline(row, cell, ',');  // radius
    radii.push_back(std::stod(cell));
  }
  REQUIRE(radii.size() == 4);
  CHECK(radii[0] == Approx(1.0 / 1.5).margin(1e-14));
  CHECK(radii[1] == Approx(1.0 / 2.0).margin(1e-14));
  CHECK(radii[2] == Approx(1.0 / 2.5).margin(1e-14));
  CHECK(radii[3] == Approx(1.0 / 3.0).margin(1e-14));
}

TEST_CASE("verify subcommand exit codes") {
  const std::string scn = temp_path("scenario.json");
  write_file(scn, kHalfPlaneScenario);
  const std::string out = temp_path("report.json");

  SECTION("valid claim passes with exit 0") {
    RunResult r = run_cli(
        "verify --scenario " + scn + " --formula thm21 --alpha 1 --samples 1024", out);
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out_file_contents);
    CHECK(j["verdict"] == "pass");
    CHECK(j["empirical_radius"].get<double>() == Approx(1.0 / 3.0).margin(1e-4));
  }
  SECTION("overclaimed radius fails with exit 2") {
    RunResult r = run_cli("verify --scenario " + scn +
                              " --formula thm21 --alpha 1 --M 0.2 --samples 1024",
                          out);
    CHECK(r.exit_code == 2);
    CHECK(json::parse(r.out_file_contents)["verdict"] == "fail");
  }
  SECTION("failing class annotation is inconclusive with exit 3") {
    const std::string bad = temp_path("scenario_bad.json");
    write_file(bad, R"({
      "fs": [{"catalog": "koebe", "class": {"tag": "convex"}}],
      "gammas": [[1.0, 0.0]], "gs": [], "lambdas": [], "M": 1.0, "N": 0.0
    })");
    RunResult r = run_cli(
        "verify --scenario " + bad + " --formula thm21 --alpha 1 --samples 1024", out);
    CHECK(r.exit_code == 3);
  }
  SECTION("missing scenario file is a usage/IO error") {
    RunResult r = run_cli("verify --scenario /nonexistent.json --formula thm21", "");
    CHECK(r.exit_code == 1);
  }
  SECTION("malformed JSON is a usage/IO error") {
    const std::string broken = temp_path("broken.json");
    write_file(broken, "{ not json");
    RunResult r = run_cli("verify --scenario " + broken + " --formula thm21", "");
    CHECK(r.exit_code == 1);
  }
}

TEST_CASE("check subcommand") {
  const std::string out = temp_path("check.json");
  SECTION("koebe is starlike of order 0") {
    RunResult r = run_cli("check --function koebe --class starlike --xi 0", out);
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out_file_contents)["pass"].get<bool>());
  }
  SECTION("koebe is not convex") {
    RunResult r = run_cli("check --function koebe --class convex", out);
    CHECK(r.exit_code == 2);
    CHECK_FALSE(json::parse(r.out_file_contents)["pass"].get<bool>());
  }
  SECTION("lif membership is reported necessary-only") {
    RunResult r = run_cli("check --function half_plane --class lif --alpha 1", out);
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out_file_contents)["label"] == "necessary-only");
  }
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("radius --formula thm21", "").exit_code == 1);  // missing --M
  CHECK(run_cli("radius --formula nope --M 1", "").exit_code == 1);
  CHECK(run_cli("", "").exit_code == 1);  // missing subcommand
  CHECK(run_cli("sweep --formula thm23 --beta 1 --M 1", "").exit_code == 1);  // no range
  CHECK(run_cli("sweep --formula thm23 --beta 0.1:1:0.1 --M 0.5:2:0.5", "").exit_code ==
        1);  // two ranges
}
