#pragma once

// Maximum-likelihood estimation of the outcome probabilities.  Degenerate
// entries (0, 1, arbitrary) come straight from the separation analysis; the
// remaining ("pending") entries are fitted by Ford-type fixed-point
// iterations restricted to the pending outcome terms, so the estimates are
// guaranteed finite and positive.
//
// Probability structure per ordered pair (i, j) — under the order models the
// entry means "i at home":
//   Basic        p_ij  = pi_i / (pi_i + pi_j)
//   SingleOrder  p_ij  = gamma pi_i / (gamma pi_i + pi_j)
//   TeamOrder    p_ij  = pi_iH / (pi_iH + pi_jV)
//   SingleTie    win/loss/tie numerators pi_i, pi_j, nu sqrt(pi_i pi_j)
//   TeamTie      win/loss/tie numerators pi_i, pi_j, sqrt(nu_i nu_j pi_i pi_j)
// For a pair with a degenerate outcome, the denominator of the remaining
// outcomes keeps only the pending numerators.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "paircomp/dataset.hpp"
#include "paircomp/separation.hpp"

namespace paircomp {

enum class ProbTag { Determined, One, Zero, Arbitrary };

struct ProbEstimate {
  ProbTag tag = ProbTag::Arbitrary;
  double value = 0.0;  // meaningful only when tag == Determined

  bool determined() const { return tag == ProbTag::Determined; }
};

// OutcomeStatus and outcome_status come from the separation header: the
// status of an outcome is pure relation-table logic, and the global
// classification is defined in terms of it.

// Same decision as a ProbEstimate; nullopt when the entry is pending.
std::optional<ProbEstimate> degenerate_probability(const SeparationResult& sep,
                                                   int i, int j, int k);

struct FitOptions {
  double tolerance = 1e-10;    // max |change in log parameter| per sweep
  int max_iterations = 100000; // Ford iterations are reliable but slow
};

struct FitResult {
  Model model = Model::Basic;
  std::vector<std::string> teams;

  std::vector<double> strengths;       // pi_i (all models but TeamOrder)
  std::vector<double> home_strengths;  // TeamOrder pi_iH
  std::vector<double> road_strengths;  // TeamOrder pi_iV
  double order_param = 1.0;            // gamma (SingleOrder)
  double tie_param = 1.0;              // nu (SingleTie)
  std::vector<double> tie_params;      // nu_i (TeamTie)
  std::vector<double> plus_strengths;  // pi_{i+} (tie models)

  int iterations = 0;
  double max_residual = 0.0;  // max |observed - expected| at the last sweep
  bool converged = false;
  std::shared_ptr<const SeparationResult> separation;
};

// Fits the pending probabilities.  Strengths are normalized to geometric
// mean 1 within each group of teams coupled by retained games.  A result
// with converged == false reports the residual reached at the iteration cap;
// it is never silently treated as converged.
FitResult fit(const Dataset& dataset, Model model,
              std::shared_ptr<const SeparationResult> sep,
              const FitOptions& options = {});
FitResult fit(const Dataset& dataset, Model model,
              const FitOptions& options = {});

// Full matrix of estimates: entry (i, j, k) for ordered pair (i, j) and
// outcome k in {1, 2, 0}.  No-tie models populate k = 1 and k = 2 only.
class ProbMatrix {
 public:
  ProbMatrix() = default;
  ProbMatrix(Model model, int teams);

  Model model() const { return model_; }
  int team_count() const { return teams_; }
  bool has_ties() const { return model_allows_ties(model_); }
  const ProbEstimate& at(int i, int j, int k) const {
    return entries_[index(i, j, k)];
  }
  ProbEstimate& at(int i, int j, int k) { return entries_[index(i, j, k)]; }

 private:
  int index(int i, int j, int k) const;
  Model model_ = Model::Basic;
  int teams_ = 0;
  std::vector<ProbEstimate> entries_;
};

ProbMatrix probability_matrix(const FitResult& fit);

// Sum over games of the log estimated probability of the observed outcome
// (One contributes 0; a tied game under the half-win transform contributes
// half the log of each win probability).  An observed outcome estimated Zero
// or Arbitrary indicates an internal inconsistency and throws.
double log_likelihood(const FitResult& fit, const Dataset& dataset);

// Per-equation |observed - expected| over the retained outcomes.
struct ResidualReport {
  struct Equation {
    std::string name;  // "points[a]", "home-wins", "ties[b]", ...
    double observed = 0.0;
    double expected = 0.0;
  };
  std::vector<Equation> equations;
  double max_abs() const;
};
ResidualReport check_likelihood_equations(const FitResult& fit,
                                          const Dataset& dataset);

// Model probability formulas at given parameter values (no degeneracy
// handling); useful for predictions and for checking fitted parameters.
double win_probability(double pi_i, double pi_j);
double home_win_probability(double gamma, double pi_i, double pi_j);
// {p win, p loss, p tie} under the single tie parameter model.
std::array<double, 3> tie_probabilities(double pi_i, double pi_j, double nu);
// {p win, p loss, p tie} with team-specific tie parameters.
std::array<double, 3> team_tie_probabilities(double pi_i, double pi_j,
                                             double nu_i, double nu_j);

}  // namespace paircomp
