#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "orbitvar/lie/builtins.hpp"
#include "orbitvar/runner.hpp"

using namespace orbitvar;
using cli::Format;
using cli::RunConfig;

namespace {

RunConfig builtin_config(const std::string& command, const std::string& name) {
  RunConfig c;
  c.command = command;
  c.builtin = name;
  return c;
}

}  // namespace

TEST_CASE("validate builtins") {
  for (const auto& name : {"borel-nilradical-A2", "abelian:1", "sl2-borel", "heisenberg-3"}) {
    auto res = cli::run(builtin_config("validate", name));
    CHECK(res.exit_code == 0);
    auto doc = nlohmann::json::parse(res.text);
    CHECK(doc["schema"] == "orbitvar-report/1");
    CHECK(doc["command"] == "validate");
    CHECK(doc["counts"]["refuted"] == 0);
  }
  auto doc = nlohmann::json::parse(cli::run(builtin_config("validate", "borel-nilradical-A2")).text);
  CHECK(doc["sections"][0]["summary"]["category"] == "C");
  CHECK(doc["algebra"]["n"] == 3);
  CHECK(doc["algebra"]["d"] == 2);
}

TEST_CASE("input errors exit with 2") {
  RunConfig missing;
  missing.command = "validate";
  CHECK(cli::run(missing).exit_code == 2);

  CHECK(cli::run(builtin_config("validate", "e8")).exit_code == 2);
  CHECK(cli::run(builtin_config("frobnicate", "abelian:1")).exit_code == 2);

  RunConfig bad = builtin_config("validate", "abelian:1");
  bad.builtin.reset();
  bad.input = std::string(ORBITVAR_TEST_DATA) + "/bad_weight.json";
  auto res = cli::run(bad);
  CHECK(res.exit_code == 2);
  CHECK(res.error.find("ParseError") != std::string::npos);

  bad.input = std::string(ORBITVAR_TEST_DATA) + "/does_not_exist.json";
  CHECK(cli::run(bad).exit_code == 2);
}

TEST_CASE("file input matches the builtin fingerprint") {
  RunConfig c;
  c.command = "fixed-points";
  c.input = std::string(ORBITVAR_TEST_DATA) + "/sl3_nilradical.json";
  auto res = cli::run(c);
  CHECK(res.exit_code == 0);
  auto doc = nlohmann::json::parse(res.text);
  CHECK(doc["algebra"]["fingerprint"] == cli::fingerprint(lie::builtin("borel-nilradical-A2")));
  CHECK(doc["sections"][0]["summary"]["torus_fixed"] == 6);
  CHECK(doc["sections"][0]["summary"]["group_fixed"] == 2);
}

TEST_CASE("reports are deterministic and timing is opt-in") {
  auto a = cli::run(builtin_config("property-p", "borel-nilradical-A2"));
  auto b = cli::run(builtin_config("property-p", "borel-nilradical-A2"));
  CHECK(a.text == b.text);
  CHECK(a.text.find("seconds") == std::string::npos);
  RunConfig timed = builtin_config("property-p", "borel-nilradical-A2");
  timed.timing = true;
  CHECK(cli::run(timed).text.find("seconds") != std::string::npos);
}

TEST_CASE("module errors become unknown entries") {
  auto res = cli::run(builtin_config("chart", "borel-nilradical-A4"));
  CHECK(res.exit_code == 0);
  auto doc = nlohmann::json::parse(res.text);
  CHECK(doc["counts"]["unknown"].get<int>() > 0);
  CHECK(doc["sections"][0]["checks"][0]["witness"]["code"] == "ScaleExceeded");
}

TEST_CASE("markdown output") {
  RunConfig c = builtin_config("boundary", "borel-nilradical-A2");
  c.format = Format::Markdown;
  auto res = cli::run(c);
  CHECK(res.exit_code == 0);
  CHECK(res.text.rfind("# orbitvar boundary", 0) == 0);
  CHECK(res.text.find("| boundary-orbit-dimension | proven |") != std::string::npos);
}

TEST_CASE("refutations exit with 1") {
  auto res = cli::run(builtin_config("chart", "borel-nilradical-A2"));
  CHECK(res.exit_code == 1);
  CHECK(nlohmann::json::parse(res.text)["verdict"] == "refuted");
}

TEST_CASE("binary writes to --output") {
  auto path = std::filesystem::temp_directory_path() / "orbitvar_cli_test.json";
  std::filesystem::remove(path);
  std::string cmd = std::string(ORBITVAR_BINARY) + " ps-check --builtin abelian:1 --output " + path.string();
  CHECK(std::system(cmd.c_str()) == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto doc = nlohmann::json::parse(buf.str());
  CHECK(doc["sections"][0]["subject"] == "ps-check");
  std::filesystem::remove(path);
}
