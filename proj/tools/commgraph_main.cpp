// Command-line driver: analyze, table, distance, verify-all.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commgraph/report.hpp"

int main(int argc, char **argv)
{
  CLI::App app{"Commuting graphs and prime graphs of finite permutation groups"};
  app.require_subcommand(1);

  std::string spec;
  std::string json_path;
  std::optional<commgraph::Engine> engine;
  std::map<std::string, commgraph::Engine> const engines{{"full", commgraph::Engine::full},
                                                         {"reduced", commgraph::Engine::reduced}};
  auto *analyze = app.add_subcommand("analyze", "Components, diameters, prime graph and structural checks");
  analyze->add_option("group", spec, "Catalog name such as alt(6), or a generator file")->required();
  analyze->add_option("--json", json_path, "Write the JSON report to this file");
  analyze->add_option("--engine", engine, "Distance engine")->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));

  app.add_subcommand("table", "Maximum component diameters of the small almost simple groups");

  std::string first;
  std::string second;
  auto *dist = app.add_subcommand("distance", "Distance between two non-central elements");
  dist->add_option("group", spec)->required();
  dist->add_option("x", first, "Permutation in cycle notation, e.g. \"(1,2)(3,4)\"")->required();
  dist->add_option("y", second)->required();

  std::string corpus;
  auto *verify = app.add_subcommand("verify-all", "Run every checker on a corpus of groups");
  verify->add_option("--corpus", corpus, "File with one group spec per line");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    std::optional<std::filesystem::path> out;
    if (!json_path.empty())
      out = json_path;
    return commgraph::run_analyze(spec, out, engine, std::cout, std::cerr);
  }
  if (dist->parsed())
    return commgraph::run_distance(spec, first, second, std::cout, std::cerr);
  if (verify->parsed()) {
    std::optional<std::filesystem::path> path;
    if (!corpus.empty())
      path = corpus;
    return commgraph::run_verify_all(path, std::cout, std::cerr);
  }
  return commgraph::run_table(std::cout, std::cerr);
}
