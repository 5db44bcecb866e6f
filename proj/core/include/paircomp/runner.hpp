#pragma once

// Command-line front end engine: one call runs parse -> separation -> fit ->
// summary and writes the selected artifact to `out`, diagnostics to `err`.
// The binary in tools/ is a thin argument parser over this.

#include <iosfwd>
#include <optional>
#include <string>

#include "paircomp/summary.hpp"

namespace paircomp {

enum class Command { Fit, Separate, Rank, Diagram };
enum class OutputFormat { Table, Json, Dot };

struct RunConfig {
  Command command = Command::Fit;
  std::string input_path;
  Model model = Model::Basic;
  bool half_win = false;
  std::optional<PointSystem> points;
  double tolerance = 1e-10;
  int max_iterations = 100000;
  OutputFormat format = OutputFormat::Table;
  bool provenance = false;    // emit the step-numbered relation table(s)
  int others_threshold = 6;   // class size above which DOT nodes collapse
};

// Exit status: 0 success, 2 input/validation failure, 3 non-convergence.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitNoConvergence = 3;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace paircomp
