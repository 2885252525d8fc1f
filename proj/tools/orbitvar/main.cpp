#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "orbitvar/runner.hpp"

int main(int argc, char** argv) {
  using orbitvar::cli::Format;

  CLI::App app{"Verification reports for torus-graded nilpotent Lie algebras"};
  orbitvar::cli::RunConfig config;
  std::string input, builtin, output, format = "json";

  app.add_option("command", config.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(orbitvar::cli::command_names()));
  auto* in = app.add_option("--input", input, "Algebra JSON file");
  auto* bi = app.add_option("--builtin", builtin, "Builtin algebra name");
  in->excludes(bi);
  app.add_option("--seed", config.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "markdown"}))
      ->capture_default_str();
  app.add_option("--output", output, "Write the report to this path instead of stdout");
  app.add_flag("--timing", config.timing, "Include wall-clock seconds per section");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (in->count()) config.input = input;
  if (bi->count()) config.builtin = builtin;
  config.format = format == "markdown" ? Format::Markdown : Format::Json;

  auto result = orbitvar::cli::run(config);
  if (result.exit_code == 2) {
    std::cerr << "orbitvar: " << result.error << "\n";
    return 2;
  }
  if (output.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "orbitvar: cannot write " << output << "\n";
      return 2;
    }
    out << result.text;
  }
  return result.exit_code;
}
