#pragma once

// Round-robin summary statistics over a probability matrix.
//
// RRWP (round-robin winning percentage) is the fraction of games a team
// would be expected to win against a balanced schedule of the other teams;
// arbitrary win/loss probabilities count 1/2.  For tie models the per-pair
// substitution is: all three outcomes arbitrary -> 1/3 each; one outcome
// impossible and the other two arbitrary -> 1/2 each.  RRPPG generalizes to
// any point system (c1 per win, c2 per loss, c0 per tie).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "paircomp/estimation.hpp"

namespace paircomp {

struct PointSystem {
  double c1 = 1.0, c2 = 0.0, c0 = 0.5;
};

struct RoundRobinSummary {
  Model model = Model::Basic;
  std::vector<std::string> teams;
  std::vector<double> rrwp;  // R_i
  // R_ik as {win, loss, tie} rows; filled for tie models only.
  std::vector<std::array<double, 3>> outcomes;
  std::optional<PointSystem> points;
  std::vector<double> rrppg;  // T_i; filled when points are supplied
};

// R_i per team.  Basic averages p_ij; the order models average each pairing
// once at home and once on the road; the tie models use R_i1 + R_i0 / 2.
std::vector<double> rrwp(const ProbMatrix& matrix);

// R_ik per team as {win, loss, tie}; tie models only (throws otherwise).
std::vector<std::array<double, 3>> round_robin_outcomes(
    const ProbMatrix& matrix);

// T_i = c1 R_i1 + c2 R_i2 + c0 R_i0.
std::vector<double> rrppg(const std::vector<std::array<double, 3>>& outcomes,
                          const PointSystem& points);

RoundRobinSummary summarize(const ProbMatrix& matrix,
                            const std::vector<std::string>& teams,
                            const std::optional<PointSystem>& points = {});

// Team indices sorted by descending T_i when a point system was supplied,
// else by descending R_i; ties broken by team label.
std::vector<int> rank(const RoundRobinSummary& summary);

}  // namespace paircomp
