#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "paircomp/dataset.hpp"
#include "paircomp/runner.hpp"

namespace {

struct Args {
  std::string input;
  std::string model = "basic";
  std::string format = "table";
  std::string points;
  bool half_win = false;
  bool provenance = false;
  double tolerance = 1e-10;
  int max_iterations = 100000;
  int others_threshold = 6;
};

void add_io_options(CLI::App* cmd, Args& args) {
  cmd->add_option("input", args.input, "CSV game file (first,second,outcome)")
      ->required();
  cmd->add_option("--model", args.model,
                  "basic | single-order | team-order | single-tie | team-tie");
  cmd->add_option("--format", args.format, "table | json | dot");
  cmd->add_flag("--half-win", args.half_win,
                "credit each tie as half a win per side (no-tie models only)");
}

void add_fit_options(CLI::App* cmd, Args& args) {
  cmd->add_option("--tol", args.tolerance,
                  "convergence tolerance on the log-parameter change");
  cmd->add_option("--max-iter", args.max_iterations, "iteration cap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paired-comparison separation analysis, fitting, and ranking"};
  app.require_subcommand(1);

  Args args;
  CLI::App* fit_cmd = app.add_subcommand(
      "fit", "fit the outcome probabilities and model parameters");
  CLI::App* separate_cmd = app.add_subcommand(
      "separate", "classify which outcome probabilities degenerate");
  CLI::App* rank_cmd =
      app.add_subcommand("rank", "round-robin standings (RRWP / RRPPG)");
  CLI::App* diagram_cmd =
      app.add_subcommand("diagram", "DOT diagram of the dominance classes");

  for (CLI::App* cmd : {fit_cmd, separate_cmd, rank_cmd, diagram_cmd})
    add_io_options(cmd, args);
  add_fit_options(fit_cmd, args);
  add_fit_options(rank_cmd, args);
  rank_cmd->add_option("--points", args.points,
                       "per-game points as win,loss,tie (tie models only)");
  separate_cmd->add_flag("--provenance", args.provenance,
                         "include the step-numbered derivation tables");
  for (CLI::App* cmd : {separate_cmd, diagram_cmd})
    cmd->add_option("--others-threshold", args.others_threshold,
                    "collapse DOT classes larger than this into one node");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return paircomp::kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return paircomp::kExitBadInput;
  }

  paircomp::RunConfig config;
  if (fit_cmd->parsed()) config.command = paircomp::Command::Fit;
  if (separate_cmd->parsed()) config.command = paircomp::Command::Separate;
  if (rank_cmd->parsed()) config.command = paircomp::Command::Rank;
  if (diagram_cmd->parsed()) config.command = paircomp::Command::Diagram;
  config.input_path = args.input;
  config.half_win = args.half_win;
  config.tolerance = args.tolerance;
  config.max_iterations = args.max_iterations;
  config.provenance = args.provenance;
  config.others_threshold = args.others_threshold;

  try {
    config.model = paircomp::model_from_string(args.model);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return paircomp::kExitBadInput;
  }

  if (args.format == "table") {
    config.format = paircomp::OutputFormat::Table;
  } else if (args.format == "json") {
    config.format = paircomp::OutputFormat::Json;
  } else if (args.format == "dot") {
    config.format = paircomp::OutputFormat::Dot;
  } else {
    std::cerr << "error: unknown format '" << args.format
              << "' (expected table, json, or dot)\n";
    return paircomp::kExitBadInput;
  }

  if (!args.points.empty()) {
    paircomp::PointSystem points;
    int consumed = 0;
    if (std::sscanf(args.points.c_str(), " %lf , %lf , %lf %n", &points.c1,
                    &points.c2, &points.c0, &consumed) != 3 ||
        args.points.c_str()[consumed] != '\0') {
      std::cerr << "error: --points expects three numbers as win,loss,tie\n";
      return paircomp::kExitBadInput;
    }
    config.points = points;
  }

  return paircomp::run(config, std::cout, std::cerr);
}
