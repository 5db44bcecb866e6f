#include "paircomp/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace paircomp {

namespace {

// One unordered pair with at least one pending outcome and at least one
// observed pending game (Basic and the tie models).
struct PendingPair {
  int i = 0, j = 0;  // i < j
  bool win_i = false, win_j = false, tie = false;
  double y_i = 0.0, y_j = 0.0, y_tie = 0.0;
  double n_pending = 0.0;  // observed games over the pending outcomes
};

// One ordered home/visitor pairing with pending outcomes (order models).
struct PendingVenue {
  int home = 0, visitor = 0;
  double games = 0.0, home_wins = 0.0, road_wins = 0.0;
};

struct PendingSystem {
  std::vector<PendingPair> pairs;
  std::vector<PendingVenue> venues;
  bool empty() const { return pairs.empty() && venues.empty(); }
};

PendingSystem collect_pending(const Dataset& ds, const SeparationResult& sep) {
  PendingSystem sys;
  const int t = ds.team_count();
  switch (sep.model) {
    case Model::Basic:
      for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
          if (outcome_status(sep, i, j, 1) != OutcomeStatus::Pending) continue;
          PendingPair p;
          p.i = i;
          p.j = j;
          p.win_i = p.win_j = true;
          p.y_i = ds.wins_of_over(i, j);
          p.y_j = ds.wins_of_over(j, i);
          p.n_pending = p.y_i + p.y_j;
          if (p.n_pending > 0.0) sys.pairs.push_back(p);
        }
      break;
    case Model::SingleOrder:
    case Model::TeamOrder:
      for (int h = 0; h < t; ++h)
        for (int v = 0; v < t; ++v) {
          if (h == v) continue;
          if (outcome_status(sep, h, v, 1) != OutcomeStatus::Pending) continue;
          PendingVenue pv;
          pv.home = h;
          pv.visitor = v;
          pv.games = ds.ordered_games(h, v);
          pv.home_wins = ds.home_wins(h, v);
          pv.road_wins = ds.visitor_wins(h, v);
          if (pv.games > 0.0) sys.venues.push_back(pv);
        }
      break;
    case Model::SingleTie:
    case Model::TeamTie:
      for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
          PendingPair p;
          p.i = i;
          p.j = j;
          p.win_i = outcome_status(sep, i, j, 1) == OutcomeStatus::Pending;
          p.win_j = outcome_status(sep, i, j, 2) == OutcomeStatus::Pending;
          p.tie = outcome_status(sep, i, j, 0) == OutcomeStatus::Pending;
          if (!p.win_i && !p.win_j && !p.tie) continue;
          p.y_i = ds.wins_of_over(i, j);
          p.y_j = ds.wins_of_over(j, i);
          p.y_tie = ds.ties_between(i, j);
          p.n_pending = (p.win_i ? p.y_i : 0.0) + (p.win_j ? p.y_j : 0.0) +
                        (p.tie ? p.y_tie : 0.0);
          if (p.n_pending > 0.0) sys.pairs.push_back(p);
        }
      break;
  }
  return sys;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// The pending-numerator denominator of a pair at the current parameters.
double pair_denominator(const FitResult& r, const PendingPair& p) {
  double d = 0.0;
  if (p.win_i) d += r.strengths[p.i];
  if (p.win_j) d += r.strengths[p.j];
  if (p.tie) {
    if (r.model == Model::SingleTie)
      d += r.tie_param * std::sqrt(r.strengths[p.i] * r.strengths[p.j]);
    else
      d += r.plus_strengths[p.i] * r.plus_strengths[p.j];
  }
  return d;
}

ResidualReport evaluate_equations(const FitResult& r,
                                  const PendingSystem& sys) {
  ResidualReport report;
  const int t = static_cast<int>(r.teams.size());
  auto push = [&](std::string name, double obs, double exp) {
    report.equations.push_back({std::move(name), obs, exp});
  };
  switch (r.model) {
    case Model::Basic: {
      std::vector<double> obs(t, 0.0), exp(t, 0.0);
      std::vector<char> used(t, 0);
      for (const PendingPair& p : sys.pairs) {
        const double ph =
            r.strengths[p.i] / (r.strengths[p.i] + r.strengths[p.j]);
        obs[p.i] += p.y_i;
        exp[p.i] += p.n_pending * ph;
        obs[p.j] += p.y_j;
        exp[p.j] += p.n_pending * (1.0 - ph);
        used[p.i] = used[p.j] = 1;
      }
      for (int i = 0; i < t; ++i)
        if (used[i]) push("points[" + r.teams[i] + "]", obs[i], exp[i]);
      break;
    }
    case Model::SingleOrder: {
      std::vector<double> obs(t, 0.0), exp(t, 0.0);
      std::vector<char> used(t, 0);
      double tie_obs = 0.0, tie_exp = 0.0;
      for (const PendingVenue& v : sys.venues) {
        const double num = r.order_param * r.strengths[v.home];
        const double ph = num / (num + r.strengths[v.visitor]);
        obs[v.home] += v.home_wins;
        exp[v.home] += v.games * ph;
        obs[v.visitor] += v.road_wins;
        exp[v.visitor] += v.games * (1.0 - ph);
        used[v.home] = used[v.visitor] = 1;
        tie_obs += v.home_wins;
        tie_exp += v.games * ph;
      }
      for (int i = 0; i < t; ++i)
        if (used[i]) push("points[" + r.teams[i] + "]", obs[i], exp[i]);
      if (!sys.venues.empty()) push("home-wins", tie_obs, tie_exp);
      break;
    }
    case Model::TeamOrder: {
      std::vector<double> obs(2 * t, 0.0), exp(2 * t, 0.0);
      std::vector<char> used(2 * t, 0);
      for (const PendingVenue& v : sys.venues) {
        const double ph = r.home_strengths[v.home] /
                          (r.home_strengths[v.home] +
                           r.road_strengths[v.visitor]);
        obs[v.home] += v.home_wins;
        exp[v.home] += v.games * ph;
        obs[t + v.visitor] += v.road_wins;
        exp[t + v.visitor] += v.games * (1.0 - ph);
        used[v.home] = used[t + v.visitor] = 1;
      }
      for (int k = 0; k < 2 * t; ++k)
        if (used[k])
          push("points[" + r.teams[k % t] + (k < t ? "H" : "V") + "]", obs[k],
               exp[k]);
      break;
    }
    case Model::SingleTie: {
      std::vector<double> obs(t, 0.0), exp(t, 0.0);
      std::vector<char> used(t, 0);
      double tie_obs = 0.0, tie_exp = 0.0;
      bool any_tie = false;
      for (const PendingPair& p : sys.pairs) {
        const double d = pair_denominator(r, p);
        const double root = std::sqrt(r.strengths[p.i] * r.strengths[p.j]);
        const double tie_share =
            p.tie ? p.n_pending * r.tie_param * root / d : 0.0;
        if (p.win_i) {
          obs[p.i] += p.y_i;
          exp[p.i] += p.n_pending * r.strengths[p.i] / d;
          used[p.i] = 1;
        }
        if (p.win_j) {
          obs[p.j] += p.y_j;
          exp[p.j] += p.n_pending * r.strengths[p.j] / d;
          used[p.j] = 1;
        }
        if (p.tie) {
          obs[p.i] += p.y_tie / 2.0;
          obs[p.j] += p.y_tie / 2.0;
          exp[p.i] += tie_share / 2.0;
          exp[p.j] += tie_share / 2.0;
          used[p.i] = used[p.j] = 1;
          tie_obs += p.y_tie;
          tie_exp += tie_share;
          any_tie = true;
        }
      }
      for (int i = 0; i < t; ++i)
        if (used[i]) push("points[" + r.teams[i] + "]", obs[i], exp[i]);
      if (any_tie) push("ties", tie_obs, tie_exp);
      break;
    }
    case Model::TeamTie: {
      std::vector<double> wobs(t, 0.0), wexp(t, 0.0);
      std::vector<double> tobs(t, 0.0), texp(t, 0.0);
      std::vector<char> wused(t, 0), tused(t, 0);
      for (const PendingPair& p : sys.pairs) {
        const double d = pair_denominator(r, p);
        if (p.win_i) {
          wobs[p.i] += p.y_i;
          wexp[p.i] += p.n_pending * r.strengths[p.i] / d;
          wused[p.i] = 1;
        }
        if (p.win_j) {
          wobs[p.j] += p.y_j;
          wexp[p.j] += p.n_pending * r.strengths[p.j] / d;
          wused[p.j] = 1;
        }
        if (p.tie) {
          const double share = p.n_pending * r.plus_strengths[p.i] *
                               r.plus_strengths[p.j] / d;
          tobs[p.i] += p.y_tie;
          texp[p.i] += share;
          tobs[p.j] += p.y_tie;
          texp[p.j] += share;
          tused[p.i] = tused[p.j] = 1;
        }
      }
      for (int i = 0; i < t; ++i)
        if (wused[i]) push("wins[" + r.teams[i] + "]", wobs[i], wexp[i]);
      for (int i = 0; i < t; ++i)
        if (tused[i]) push("ties[" + r.teams[i] + "]", tobs[i], texp[i]);
      break;
    }
  }
  return report;
}

// Reports |log(next/current)| and applies the update; a non-positive
// numerator means the restricted maximum sits on the boundary, which the
// separation analysis is supposed to have ruled out -- treat it as
// non-convergence rather than poisoning the parameters.
double apply_update(double& param, double num, double den) {
  if (den <= 0.0) return 0.0;  // parameter absent from the pending terms
  if (num <= 0.0) return std::numeric_limits<double>::infinity();
  const double next = num / den;
  const double delta = std::fabs(std::log(next / param));
  param = next;
  return delta;
}

void finalize_derived(FitResult& r) {
  const int t = static_cast<int>(r.teams.size());
  if (r.model == Model::SingleTie)
    for (int i = 0; i < t; ++i)
      r.plus_strengths[i] = std::sqrt(r.strengths[i] * r.tie_param);
  if (r.model == Model::TeamTie)
    for (int i = 0; i < t; ++i)
      r.tie_params[i] =
          r.plus_strengths[i] * r.plus_strengths[i] / r.strengths[i];
}

double model_numerator(const FitResult& r, int i, int j, int k) {
  switch (r.model) {
    case Model::Basic:
      return k == 1 ? r.strengths[i] : r.strengths[j];
    case Model::SingleOrder:
      return k == 1 ? r.order_param * r.strengths[i] : r.strengths[j];
    case Model::TeamOrder:
      return k == 1 ? r.home_strengths[i] : r.road_strengths[j];
    case Model::SingleTie:
      if (k == 1) return r.strengths[i];
      if (k == 2) return r.strengths[j];
      return r.tie_param * std::sqrt(r.strengths[i] * r.strengths[j]);
    case Model::TeamTie:
      if (k == 1) return r.strengths[i];
      if (k == 2) return r.strengths[j];
      return r.plus_strengths[i] * r.plus_strengths[j];
  }
  return 0.0;
}

}  // namespace

std::optional<ProbEstimate> degenerate_probability(const SeparationResult& sep,
                                                   int i, int j, int k) {
  switch (outcome_status(sep, i, j, k)) {
    case OutcomeStatus::One:
      return ProbEstimate{ProbTag::One, 1.0};
    case OutcomeStatus::Zero:
      return ProbEstimate{ProbTag::Zero, 0.0};
    case OutcomeStatus::Arbitrary:
      return ProbEstimate{ProbTag::Arbitrary, 0.0};
    case OutcomeStatus::Pending:
      break;
  }
  return std::nullopt;
}

FitResult fit(const Dataset& dataset, Model model,
              std::shared_ptr<const SeparationResult> sep,
              const FitOptions& options) {
  if (!sep)
    sep = std::make_shared<SeparationResult>(saturate(dataset, model));
  if (sep->model != model)
    throw std::invalid_argument(
        "fit: the separation analysis was run under a different model");

  FitResult r;
  r.model = model;
  r.teams = dataset.teams();
  r.separation = sep;
  const int t = dataset.team_count();

  if (model == Model::TeamOrder) {
    r.home_strengths.assign(t, 1.0);
    r.road_strengths.assign(t, 1.0);
  } else {
    r.strengths.assign(t, 1.0);
  }
  if (model == Model::SingleTie || model == Model::TeamTie)
    r.plus_strengths.assign(t, 1.0);
  if (model == Model::TeamTie) r.tie_params.assign(t, 1.0);

  const PendingSystem sys = collect_pending(dataset, *sep);
  if (sys.empty()) {
    r.converged = true;
    finalize_derived(r);
    return r;
  }

  // Coupling components over the retained games; strengths are normalized
  // to geometric mean one within each component after every sweep.
  const bool item_space = (model == Model::TeamOrder);
  const int units = item_space ? 2 * t : t;
  DisjointSets comps(units);
  std::vector<char> in_system(units, 0);
  std::vector<std::vector<int>> by_team(t);
  std::vector<std::vector<int>> as_home(t), as_visitor(t);
  for (int idx = 0; idx < static_cast<int>(sys.pairs.size()); ++idx) {
    const PendingPair& p = sys.pairs[idx];
    by_team[p.i].push_back(idx);
    by_team[p.j].push_back(idx);
    in_system[p.i] = in_system[p.j] = 1;
    comps.unite(p.i, p.j);
  }
  for (int idx = 0; idx < static_cast<int>(sys.venues.size()); ++idx) {
    const PendingVenue& v = sys.venues[idx];
    as_home[v.home].push_back(idx);
    as_visitor[v.visitor].push_back(idx);
    if (item_space) {
      in_system[v.home] = in_system[t + v.visitor] = 1;
      comps.unite(v.home, t + v.visitor);
    } else {
      in_system[v.home] = in_system[v.visitor] = 1;
      comps.unite(v.home, v.visitor);
    }
  }

  auto unit_value = [&](int k) -> double& {
    if (!item_space) return r.strengths[k];
    return k < t ? r.home_strengths[k] : r.road_strengths[k - t];
  };
  auto normalize = [&]() {
    std::vector<double> logsum(units, 0.0);
    std::vector<int> count(units, 0);
    for (int k = 0; k < units; ++k)
      if (in_system[k]) {
        const int root = comps.find(k);
        logsum[root] += std::log(unit_value(k));
        ++count[root];
      }
    for (int k = 0; k < units; ++k)
      if (in_system[k]) {
        const int root = comps.find(k);
        const double mean = std::exp(logsum[root] / count[root]);
        unit_value(k) /= mean;
        if (model == Model::TeamTie) r.plus_strengths[k] /= std::sqrt(mean);
      }
  };

  auto sweep = [&]() -> double {
    double delta = 0.0;
    switch (model) {
      case Model::Basic:
        for (int i = 0; i < t; ++i) {
          if (by_team[i].empty()) continue;
          double num = 0.0, den = 0.0;
          for (int idx : by_team[i]) {
            const PendingPair& p = sys.pairs[idx];
            const int o = (p.i == i) ? p.j : p.i;
            num += (p.i == i) ? p.y_i : p.y_j;
            den += p.n_pending / (r.strengths[i] + r.strengths[o]);
          }
          delta = std::max(delta, apply_update(r.strengths[i], num, den));
        }
        break;
      case Model::SingleOrder: {
        for (int i = 0; i < t; ++i) {
          if (as_home[i].empty() && as_visitor[i].empty()) continue;
          double num = 0.0, den = 0.0;
          for (int idx : as_home[i]) {
            const PendingVenue& v = sys.venues[idx];
            num += v.home_wins;
            den += v.games * r.order_param /
                   (r.order_param * r.strengths[i] + r.strengths[v.visitor]);
          }
          for (int idx : as_visitor[i]) {
            const PendingVenue& v = sys.venues[idx];
            num += v.road_wins;
            den += v.games /
                   (r.order_param * r.strengths[v.home] + r.strengths[i]);
          }
          delta = std::max(delta, apply_update(r.strengths[i], num, den));
        }
        double num = 0.0, den = 0.0;
        for (const PendingVenue& v : sys.venues) {
          num += v.home_wins;
          den += v.games * r.strengths[v.home] /
                 (r.order_param * r.strengths[v.home] +
                  r.strengths[v.visitor]);
        }
        delta = std::max(delta, apply_update(r.order_param, num, den));
        break;
      }
      case Model::TeamOrder: {
        for (int i = 0; i < t; ++i) {
          if (as_home[i].empty()) continue;
          double num = 0.0, den = 0.0;
          for (int idx : as_home[i]) {
            const PendingVenue& v = sys.venues[idx];
            num += v.home_wins;
            den += v.games / (r.home_strengths[i] +
                              r.road_strengths[v.visitor]);
          }
          delta = std::max(delta, apply_update(r.home_strengths[i], num, den));
        }
        for (int j = 0; j < t; ++j) {
          if (as_visitor[j].empty()) continue;
          double num = 0.0, den = 0.0;
          for (int idx : as_visitor[j]) {
            const PendingVenue& v = sys.venues[idx];
            num += v.road_wins;
            den += v.games /
                   (r.home_strengths[v.home] + r.road_strengths[j]);
          }
          delta = std::max(delta, apply_update(r.road_strengths[j], num, den));
        }
        break;
      }
      case Model::SingleTie: {
        for (int i = 0; i < t; ++i) {
          if (by_team[i].empty()) continue;
          double points = 0.0, den = 0.0;
          const double xi = std::sqrt(r.strengths[i]);
          for (int idx : by_team[i]) {
            const PendingPair& p = sys.pairs[idx];
            const bool first = (p.i == i);
            const int o = first ? p.j : p.i;
            const bool win_mine = first ? p.win_i : p.win_j;
            const double y_mine = first ? p.y_i : p.y_j;
            const double d = pair_denominator(r, p);
            double coeff = 0.0;
            if (win_mine) {
              points += 2.0 * y_mine;
              coeff += 2.0 * xi;
            }
            if (p.tie) {
              points += p.y_tie;
              coeff += r.tie_param * std::sqrt(r.strengths[o]);
            }
            if (coeff > 0.0) den += p.n_pending * coeff / d;
          }
          if (den <= 0.0) continue;
          if (points <= 0.0) {
            delta = std::numeric_limits<double>::infinity();
            continue;
          }
          const double root_next = points / den;
          const double next = root_next * root_next;
          delta = std::max(delta, std::fabs(std::log(next / r.strengths[i])));
          r.strengths[i] = next;
        }
        double num = 0.0, den = 0.0;
        for (const PendingPair& p : sys.pairs) {
          if (!p.tie) continue;
          const double root = std::sqrt(r.strengths[p.i] * r.strengths[p.j]);
          num += p.y_tie;
          den += p.n_pending * root / pair_denominator(r, p);
        }
        delta = std::max(delta, apply_update(r.tie_param, num, den));
        break;
      }
      case Model::TeamTie: {
        for (int i = 0; i < t; ++i) {
          if (by_team[i].empty()) continue;
          double num = 0.0, den = 0.0;
          bool appears = false;
          for (int idx : by_team[i]) {
            const PendingPair& p = sys.pairs[idx];
            const bool win_mine = (p.i == i) ? p.win_i : p.win_j;
            if (!win_mine) continue;
            appears = true;
            num += (p.i == i) ? p.y_i : p.y_j;
            den += p.n_pending / pair_denominator(r, p);
          }
          if (appears)
            delta = std::max(delta, apply_update(r.strengths[i], num, den));
        }
        for (int i = 0; i < t; ++i) {
          if (by_team[i].empty()) continue;
          double num = 0.0, den = 0.0;
          bool appears = false;
          for (int idx : by_team[i]) {
            const PendingPair& p = sys.pairs[idx];
            if (!p.tie) continue;
            const int o = (p.i == i) ? p.j : p.i;
            appears = true;
            num += p.y_tie;
            den += p.n_pending * r.plus_strengths[o] / pair_denominator(r, p);
          }
          if (appears)
            delta =
                std::max(delta, apply_update(r.plus_strengths[i], num, den));
        }
        break;
      }
    }
    return delta;
  };

  for (int iteration = 1; iteration <= options.max_iterations; ++iteration) {
    const double delta = sweep();
    normalize();
    r.iterations = iteration;
    if (delta < options.tolerance) {
      r.converged = true;
      break;
    }
  }
  finalize_derived(r);
  r.max_residual = evaluate_equations(r, sys).max_abs();
  return r;
}

FitResult fit(const Dataset& dataset, Model model, const FitOptions& options) {
  return fit(dataset, model, nullptr, options);
}

ProbMatrix::ProbMatrix(Model model, int teams)
    : model_(model),
      teams_(teams),
      entries_(static_cast<size_t>(teams) * teams * 3) {}

int ProbMatrix::index(int i, int j, int k) const {
  const int slot = (k == 1) ? 0 : (k == 2) ? 1 : 2;
  return (i * teams_ + j) * 3 + slot;
}

ProbMatrix probability_matrix(const FitResult& fit) {
  if (!fit.separation)
    throw std::logic_error(
        "probability_matrix: the fit carries no separation analysis");
  const SeparationResult& sep = *fit.separation;
  const int t = static_cast<int>(fit.teams.size());
  ProbMatrix m(fit.model, t);
  const int kinds[3] = {1, 2, 0};
  const int n_kinds = model_allows_ties(fit.model) ? 3 : 2;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (i == j) continue;
      double pending_den = 0.0;
      for (int ki = 0; ki < n_kinds; ++ki)
        if (outcome_status(sep, i, j, kinds[ki]) == OutcomeStatus::Pending)
          pending_den += model_numerator(fit, i, j, kinds[ki]);
      for (int ki = 0; ki < n_kinds; ++ki) {
        const int k = kinds[ki];
        if (auto deg = degenerate_probability(sep, i, j, k)) {
          m.at(i, j, k) = *deg;
          continue;
        }
        m.at(i, j, k) = ProbEstimate{
            ProbTag::Determined, model_numerator(fit, i, j, k) / pending_den};
      }
    }
  return m;
}

double log_likelihood(const FitResult& fit, const Dataset& dataset) {
  const ProbMatrix m = probability_matrix(fit);
  const int t = dataset.team_count();
  std::vector<int> to_fit(t);
  for (int d = 0; d < t; ++d) {
    const auto it =
        std::find(fit.teams.begin(), fit.teams.end(), dataset.teams()[d]);
    if (it == fit.teams.end())
      throw std::invalid_argument(
          "log_likelihood: the dataset names a team the fit does not know: " +
          dataset.teams()[d]);
    to_fit[d] = static_cast<int>(it - fit.teams.begin());
  }
  double total = 0.0;
  auto add = [&](double count, const ProbEstimate& e) {
    if (count <= 0.0) return;
    if (e.tag == ProbTag::One) return;  // log(1) contributes nothing
    if (e.tag == ProbTag::Determined) {
      total += count * std::log(e.value);
      return;
    }
    throw std::runtime_error(
        "log_likelihood: an observed outcome has estimated probability zero");
  };
  if (fit.model == Model::SingleOrder || fit.model == Model::TeamOrder) {
    for (int h = 0; h < t; ++h)
      for (int v = 0; v < t; ++v) {
        if (h == v) continue;
        add(dataset.home_wins(h, v), m.at(to_fit[h], to_fit[v], 1));
        add(dataset.visitor_wins(h, v), m.at(to_fit[h], to_fit[v], 2));
      }
  } else {
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) {
        add(dataset.wins_of_over(i, j), m.at(to_fit[i], to_fit[j], 1));
        add(dataset.wins_of_over(j, i), m.at(to_fit[j], to_fit[i], 1));
        if (model_allows_ties(fit.model))
          add(dataset.ties_between(i, j), m.at(to_fit[i], to_fit[j], 0));
      }
  }
  return total;
}

double ResidualReport::max_abs() const {
  double worst = 0.0;
  for (const Equation& e : equations)
    worst = std::max(worst, std::fabs(e.observed - e.expected));
  return worst;
}

ResidualReport check_likelihood_equations(const FitResult& fit,
                                          const Dataset& dataset) {
  if (dataset.teams() != fit.teams)
    throw std::invalid_argument(
        "check_likelihood_equations: dataset and fit disagree on the team "
        "list");
  std::shared_ptr<const SeparationResult> sep = fit.separation;
  if (!sep)
    sep = std::make_shared<SeparationResult>(saturate(dataset, fit.model));
  return evaluate_equations(fit, collect_pending(dataset, *sep));
}

double win_probability(double pi_i, double pi_j) {
  return pi_i / (pi_i + pi_j);
}

double home_win_probability(double gamma, double pi_i, double pi_j) {
  return gamma * pi_i / (gamma * pi_i + pi_j);
}

std::array<double, 3> tie_probabilities(double pi_i, double pi_j, double nu) {
  const double tie = nu * std::sqrt(pi_i * pi_j);
  const double d = pi_i + pi_j + tie;
  return {pi_i / d, pi_j / d, tie / d};
}

std::array<double, 3> team_tie_probabilities(double pi_i, double pi_j,
                                             double nu_i, double nu_j) {
  const double tie = std::sqrt(nu_i * nu_j * pi_i * pi_j);
  const double d = pi_i + pi_j + tie;
  return {pi_i / d, pi_j / d, tie / d};
}

}  // namespace paircomp
