#include "paircomp/runner.hpp"

#include <json.hpp>

#include <cstdio>
#include <exception>
#include <memory>
#include <ostream>
#include <string>

#include "paircomp/dataset.hpp"
#include "paircomp/estimation.hpp"
#include "paircomp/render.hpp"
#include "paircomp/separation.hpp"
#include "paircomp/summary.hpp"

namespace paircomp {

namespace {

std::string fmt(const char* spec, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, value);
  return buf;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.points && !model_allows_ties(config.model)) {
      err << "error: --points applies to tie-capable models only\n";
      return kExitBadInput;
    }
    if (config.half_win && model_allows_ties(config.model)) {
      err << "error: --half-win applies to models without a tie outcome\n";
      return kExitBadInput;
    }
    if (config.format == OutputFormat::Dot &&
        config.command != Command::Separate &&
        config.command != Command::Diagram) {
      err << "error: dot output is available for separate and diagram only\n";
      return kExitBadInput;
    }

    Dataset ds =
        parse_dataset_file(config.input_path, config.model, config.half_win);
    auto sep =
        std::make_shared<const SeparationResult>(saturate(ds, config.model));
    err << "separation: " << to_string(sep->global) << '\n';

    if (config.command == Command::Separate) {
      switch (config.format) {
        case OutputFormat::Dot:
          out << render_dot(*sep, nullptr, config.others_threshold);
          break;
        case OutputFormat::Json:
          out << separation_json(*sep, config.provenance);
          break;
        case OutputFormat::Table:
          out << render_separation_text(*sep, config.provenance);
          break;
      }
      return kExitOk;
    }
    if (config.command == Command::Diagram) {
      // The diagram subcommand is DOT by definition, whatever the format.
      out << render_dot(*sep, nullptr, config.others_threshold);
      return kExitOk;
    }

    FitOptions options;
    options.tolerance = config.tolerance;
    options.max_iterations = config.max_iterations;
    FitResult fr = fit(ds, config.model, sep, options);
    if (!fr.converged)
      err << "warning: estimation did not converge within "
          << options.max_iterations << " iterations (max residual "
          << fmt("%.3g", fr.max_residual) << ")\n";
    ProbMatrix matrix = probability_matrix(fr);

    if (config.command == Command::Fit) {
      ResidualReport residuals = check_likelihood_equations(fr, ds);
      double loglik = log_likelihood(fr, ds);
      if (config.format == OutputFormat::Json) {
        nlohmann::json j = nlohmann::json::parse(fit_json(fr, matrix, residuals));
        j["log_likelihood"] = loglik;
        out << j.dump(2) << '\n';
      } else {
        out << render_fit_text(fr, matrix);
        out << "\nlog-likelihood: " << fmt("%.6f", loglik) << '\n';
      }
    } else {
      RoundRobinSummary summary = summarize(matrix, ds.teams(), config.points);
      out << (config.format == OutputFormat::Json
                  ? standings_json(summary, ds)
                  : render_standings(summary, ds));
    }
    return fr.converged ? kExitOk : kExitNoConvergence;
  } catch (const ParseError& e) {
    if (e.line() > 0)
      err << "error: line " << e.line() << ": " << e.what() << '\n';
    else
      err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

}  // namespace paircomp
