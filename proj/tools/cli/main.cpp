#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "run.hpp"

int main(int argc, char** argv) {
  gorwb::cli::RunConfig config;
  config.corpusDir = GORWB_DEFAULT_CORPUS_DIR;
  std::string out;
  std::string commands;
  for (const auto& n : gorwb::cli::commandNames()) commands += (commands.empty() ? "" : ", ") + n;

  CLI::App app{"Exact workbench for Gorenstein homological algebra over finite-dimensional algebras"};
  app.add_option("command", config.command, "one of: " + commands)->required();
  app.add_option("inputs", config.inputPaths, "input files");
  app.add_option("--bound", config.bound, "search bound for dimensions and resolutions")
      ->default_val(20);
  app.add_option("--seed", config.seed, "seed for randomized searches")->default_val(0);
  app.add_option("--format", config.format, "text, csv or json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, gorwb::cli::Format>{
          {"text", gorwb::cli::Format::Text}, {"csv", gorwb::cli::Format::Csv}, {"json", gorwb::cli::Format::Json}}));
  app.add_option("--out", out, "write the report to this file");
  app.add_flag("--injective", config.injective, "resolve: injective coresolution");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (out.empty()) return gorwb::cli::run(config, std::cout, std::cerr);
  std::ofstream file(out);
  if (!file) {
    std::cerr << "error: cannot write " << out << "\n";
    return 2;
  }
  return gorwb::cli::run(config, file, std::cerr);
}
