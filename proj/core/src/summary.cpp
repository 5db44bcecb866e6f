#include "paircomp/summary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace paircomp {

namespace {

double win_value(const ProbEstimate& e) {
  switch (e.tag) {
    case ProbTag::Determined:
      return e.value;
    case ProbTag::One:
      return 1.0;
    case ProbTag::Zero:
      return 0.0;
    case ProbTag::Arbitrary:
      return 0.5;
  }
  return 0.5;
}

// {win, loss, tie} shares credited to team i for the pairing with j.  When
// every outcome is arbitrary the pair splits into thirds; when exactly one
// outcome is impossible and the other two are arbitrary, those two split
// evenly.  Any other combination already sums to one on its own.
std::array<double, 3> pair_shares(const ProbMatrix& m, int i, int j) {
  const ProbEstimate* e[3] = {&m.at(i, j, 1), &m.at(i, j, 2), &m.at(i, j, 0)};
  int arbitrary = 0, impossible = 0;
  for (const ProbEstimate* p : e) {
    if (p->tag == ProbTag::Arbitrary) ++arbitrary;
    if (p->tag == ProbTag::Zero) ++impossible;
  }
  std::array<double, 3> shares{};
  if (arbitrary == 3) {
    shares.fill(1.0 / 3.0);
    return shares;
  }
  if (arbitrary == 2 && impossible == 1) {
    for (int k = 0; k < 3; ++k)
      shares[k] = (e[k]->tag == ProbTag::Arbitrary) ? 0.5 : 0.0;
    return shares;
  }
  for (int k = 0; k < 3; ++k) shares[k] = win_value(*e[k]);
  return shares;
}

// Summary values agree only up to the iteration tolerance, so ranking
// compares them rounded to nine decimals; exactly tied teams fall back to
// label order.  Plain rounding keeps the comparison a strict weak ordering,
// which an epsilon comparison would not.
long long rank_key(double value) {
  return std::llround(value * 1e9);
}

}  // namespace

std::vector<double> rrwp(const ProbMatrix& matrix) {
  const int t = matrix.team_count();
  std::vector<double> result(t, 0.0);
  if (matrix.has_ties()) {
    const std::vector<std::array<double, 3>> outcomes =
        round_robin_outcomes(matrix);
    for (int i = 0; i < t; ++i)
      result[i] = outcomes[i][0] + 0.5 * outcomes[i][2];
    return result;
  }
  const bool ordered = matrix.model() == Model::SingleOrder ||
                       matrix.model() == Model::TeamOrder;
  for (int i = 0; i < t; ++i) {
    double sum = 0.0;
    for (int j = 0; j < t; ++j) {
      if (j == i) continue;
      if (ordered)
        sum += win_value(matrix.at(i, j, 1)) + 1.0 -
               win_value(matrix.at(j, i, 1));
      else
        sum += win_value(matrix.at(i, j, 1));
    }
    result[i] = sum / ((ordered ? 2.0 : 1.0) * (t - 1));
  }
  return result;
}

std::vector<std::array<double, 3>> round_robin_outcomes(
    const ProbMatrix& matrix) {
  if (!matrix.has_ties())
    throw std::logic_error(
        "round_robin_outcomes: the model has no tie outcome");
  const int t = matrix.team_count();
  std::vector<std::array<double, 3>> result(t, {0.0, 0.0, 0.0});
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      if (j == i) continue;
      const std::array<double, 3> shares = pair_shares(matrix, i, j);
      for (int k = 0; k < 3; ++k) result[i][k] += shares[k];
    }
    for (int k = 0; k < 3; ++k) result[i][k] /= t - 1;
  }
  return result;
}

std::vector<double> rrppg(const std::vector<std::array<double, 3>>& outcomes,
                          const PointSystem& points) {
  std::vector<double> result(outcomes.size());
  for (size_t i = 0; i < outcomes.size(); ++i)
    result[i] = points.c1 * outcomes[i][0] + points.c2 * outcomes[i][1] +
                points.c0 * outcomes[i][2];
  return result;
}

RoundRobinSummary summarize(const ProbMatrix& matrix,
                            const std::vector<std::string>& teams,
                            const std::optional<PointSystem>& points) {
  RoundRobinSummary summary;
  summary.model = matrix.model();
  summary.teams = teams;
  if (matrix.has_ties()) summary.outcomes = round_robin_outcomes(matrix);
  summary.rrwp = rrwp(matrix);
  summary.points = points;
  if (points) {
    if (matrix.has_ties()) {
      summary.rrppg = rrppg(summary.outcomes, *points);
    } else {
      summary.rrppg.resize(summary.rrwp.size());
      for (size_t i = 0; i < summary.rrwp.size(); ++i)
        summary.rrppg[i] = points->c1 * summary.rrwp[i] +
                           points->c2 * (1.0 - summary.rrwp[i]);
    }
  }
  return summary;
}

std::vector<int> rank(const RoundRobinSummary& summary) {
  const std::vector<double>& key =
      summary.rrppg.empty() ? summary.rrwp : summary.rrppg;
  std::vector<int> order(summary.teams.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const long long ka = rank_key(key[a]), kb = rank_key(key[b]);
    if (ka != kb) return ka > kb;
    return summary.teams[a] < summary.teams[b];
  });
  return order;
}

}  // namespace paircomp
