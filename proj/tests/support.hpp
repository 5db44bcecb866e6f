#pragma once

// Shared helpers for the test binaries.  The oracles here are deliberately
// independent reimplementations (breadth-first reachability, exhaustive
// bipartition search, coordinate-ascent likelihood maximization) so the
// library can be checked against them rather than against itself.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "paircomp/dataset.hpp"
#include "paircomp/estimation.hpp"
#include "paircomp/separation.hpp"

namespace testsupport {

// ---------------------------------------------------------------------------
// Reachability oracle: BFS from every vertex, reflexive.

inline std::vector<std::vector<bool>> bfs_reachability(
    const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s) {
    std::vector<int> queue = {s};
    reach[s][s] = true;
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (int v : adj[u]) {
        if (!reach[s][v]) {
          reach[s][v] = true;
          queue.push_back(v);
        }
      }
    }
  }
  return reach;
}

// ---------------------------------------------------------------------------
// Existence oracle for the basic model: the maximum likelihood estimates all
// exist (no degenerate probabilities) iff there is no division of the teams
// into groups A and B with every cross game won by the A side.  Equivalently:
// every nonempty proper subset S has at least one win from S against its
// complement.  Exhaustive over all subsets; fine for t <= 10.

inline bool overlap_by_bipartition(const std::vector<std::vector<bool>>& wins) {
  const int t = static_cast<int>(wins.size());
  for (unsigned mask = 1; mask + 1 < (1u << t); ++mask) {
    bool out_edge = false;
    for (int i = 0; i < t && !out_edge; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = 0; j < t; ++j) {
        if ((mask >> j & 1) || !wins[i][j]) continue;
        out_edge = true;
        break;
      }
    }
    if (!out_edge) return false;  // one-way cut found
  }
  return true;
}

inline std::vector<std::vector<bool>> win_matrix(
    const paircomp::Dataset& ds) {
  const int t = ds.team_count();
  std::vector<std::vector<bool>> wins(t, std::vector<bool>(t, false));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (i != j && ds.wins_of_over(i, j) > 0) wins[i][j] = true;
  return wins;
}

// ---------------------------------------------------------------------------
// Random datasets.

inline std::vector<std::string> letter_labels(int t) {
  std::vector<std::string> labels;
  for (int i = 0; i < t; ++i)
    labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return labels;
}

inline paircomp::Dataset random_dataset(std::mt19937_64& rng, int t,
                                        int n_games, bool with_ties,
                                        paircomp::Model model,
                                        bool half_win = false) {
  std::uniform_int_distribution<int> pick(0, t - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<paircomp::Game> games;
  games.reserve(n_games);
  while (static_cast<int>(games.size()) < n_games) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    paircomp::Outcome outcome = paircomp::Outcome::FirstWins;
    double u = unit(rng);
    if (with_ties && u < 0.3)
      outcome = paircomp::Outcome::Tie;
    else if (u < 0.65)
      outcome = paircomp::Outcome::SecondWins;
    games.push_back({i, j, outcome});
  }
  // The dataset type rejects teams with no games, so give every idle team
  // one appearance against a random opponent.
  std::vector<bool> seen(t, false);
  for (const paircomp::Game& g : games) seen[g.first] = seen[g.second] = true;
  for (int i = 0; i < t; ++i) {
    if (seen[i]) continue;
    int j = pick(rng);
    while (j == i) j = pick(rng);
    paircomp::Outcome outcome = paircomp::Outcome::FirstWins;
    double u = unit(rng);
    if (with_ties && u < 0.3)
      outcome = paircomp::Outcome::Tie;
    else if (u < 0.65)
      outcome = paircomp::Outcome::SecondWins;
    games.push_back({i, j, outcome});
    seen[i] = true;
  }
  return paircomp::Dataset(letter_labels(t), games, model, half_win);
}

// Resamples until the separation analysis reports overlap (every outcome
// probability pending), growing the schedule if needed.
inline paircomp::Dataset random_overlap_dataset(std::mt19937_64& rng, int t,
                                                paircomp::Model model,
                                                bool with_ties,
                                                bool half_win = false) {
  // With two teams the home/road item graph is bipartite between
  // {aH, bV} and {bH, aV}; no game type bridges the halves, so overlap
  // is unreachable. Force a third team for that model.
  if (model == paircomp::Model::TeamOrder && t < 3) t = 3;
  for (int attempt = 0;; ++attempt) {
    int n_games = 3 * t + 2 * attempt;
    paircomp::Dataset ds =
        random_dataset(rng, t, n_games, with_ties, model, half_win);
    paircomp::Dataset fitted =
        half_win ? paircomp::apply_half_win_transform(ds) : ds;
    if (paircomp::saturate(fitted, model).global ==
        paircomp::GlobalSeparation::Overlap)
      return fitted;
  }
}

// One game for every ordered pair (each pairing home-and-home).
inline paircomp::Dataset round_robin_dataset(std::mt19937_64& rng, int t,
                                             bool with_ties,
                                             paircomp::Model model,
                                             bool half_win = false) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<paircomp::Game> games;
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      if (i == j) continue;
      paircomp::Outcome outcome = paircomp::Outcome::FirstWins;
      double u = unit(rng);
      if (with_ties && u < 0.3)
        outcome = paircomp::Outcome::Tie;
      else if (u < 0.65)
        outcome = paircomp::Outcome::SecondWins;
      games.push_back({i, j, outcome});
    }
  }
  return paircomp::Dataset(letter_labels(t), games, model, half_win);
}

// ---------------------------------------------------------------------------
// Independent likelihood maximizer: coordinate ascent with golden-section
// line searches on the log parameters.  Valid for datasets classified
// overlap, where every probability comes from the plain model formulas and
// the log-likelihood is concave in the log parameters.

class OracleMaximizer {
 public:
  OracleMaximizer(const paircomp::Dataset& ds, paircomp::Model model)
      : ds_(ds), model_(model), t_(ds.team_count()) {
    using paircomp::Model;
    switch (model_) {
      case Model::Basic: dim_ = t_; break;
      case Model::SingleOrder: dim_ = t_ + 1; break;
      case Model::TeamOrder: dim_ = 2 * t_; break;
      case Model::SingleTie: dim_ = t_ + 1; break;
      case Model::TeamTie: dim_ = 2 * t_; break;
    }
    theta_.assign(dim_, 0.0);
  }

  // {p win for first, p win for second, p tie} of the ordered game (i, j).
  std::array<double, 3> probs(int i, int j) const {
    return probs(theta_, i, j);
  }

  double maximize() {
    double best = loglik(theta_);
    for (int sweep = 0; sweep < 20000; ++sweep) {
      double max_move = 0.0;
      for (int c = 1; c < dim_; ++c) {  // coordinate 0 pins the scale
        double moved = line_search(c);
        max_move = std::max(max_move, moved);
      }
      best = loglik(theta_);
      if (max_move < 1e-11) break;
    }
    return best;
  }

  const std::vector<double>& theta() const { return theta_; }

 private:
  std::array<double, 3> probs(const std::vector<double>& th, int i,
                              int j) const {
    using paircomp::Model;
    auto logistic3 = [](double la, double lb, double lc) {
      double m = std::max(la, std::max(lb, lc));
      double ea = std::exp(la - m), eb = std::exp(lb - m),
             ec = std::exp(lc - m);
      double s = ea + eb + ec;
      return std::array<double, 3>{ea / s, eb / s, ec / s};
    };
    switch (model_) {
      case Model::Basic: {
        double p = 1.0 / (1.0 + std::exp(th[j] - th[i]));
        return {p, 1.0 - p, 0.0};
      }
      case Model::SingleOrder: {
        double p = 1.0 / (1.0 + std::exp(th[j] - th[i] - th[t_]));
        return {p, 1.0 - p, 0.0};
      }
      case Model::TeamOrder: {
        double p = 1.0 / (1.0 + std::exp(th[t_ + j] - th[i]));
        return {p, 1.0 - p, 0.0};
      }
      case Model::SingleTie: {
        double lt = th[t_] + 0.5 * (th[i] + th[j]);
        return logistic3(th[i], th[j], lt);
      }
      case Model::TeamTie: {
        double lt = 0.5 * (th[t_ + i] + th[t_ + j] + th[i] + th[j]);
        return logistic3(th[i], th[j], lt);
      }
    }
    return {0.5, 0.5, 0.0};
  }

  double loglik(const std::vector<double>& th) const {
    double sum = 0.0;
    for (const paircomp::Game& g : ds_.games()) {
      std::array<double, 3> p = probs(th, g.first, g.second);
      switch (g.outcome) {
        case paircomp::Outcome::FirstWins: sum += std::log(p[0]); break;
        case paircomp::Outcome::SecondWins: sum += std::log(p[1]); break;
        case paircomp::Outcome::Tie:
          if (ds_.half_win())
            sum += 0.5 * std::log(p[0]) + 0.5 * std::log(p[1]);
          else
            sum += std::log(p[2]);
          break;
      }
    }
    return sum;
  }

  // Golden-section maximization of the likelihood along coordinate c.
  // Returns how far the coordinate moved.
  double line_search(int c) {
    const double phi = 0.6180339887498949;
    double center = theta_[c];
    double lo = center - 4.0, hi = center + 4.0;
    auto eval = [&](double x) {
      std::vector<double> th = theta_;
      th[c] = x;
      return loglik(th);
    };
    for (int expand = 0; expand < 4; ++expand) {
      double a = lo, b = hi;
      double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
      double f1 = eval(x1), f2 = eval(x2);
      while (b - a > 1e-12) {
        if (f1 < f2) {
          a = x1; x1 = x2; f1 = f2;
          x2 = a + phi * (b - a); f2 = eval(x2);
        } else {
          b = x2; x2 = x1; f2 = f1;
          x1 = b - phi * (b - a); f1 = eval(x1);
        }
      }
      double best = 0.5 * (a + b);
      if (best - lo > 1e-6 && hi - best > 1e-6) {
        theta_[c] = best;
        return std::fabs(best - center);
      }
      lo = center - 4.0 * std::pow(4.0, expand + 1);
      hi = center + 4.0 * std::pow(4.0, expand + 1);
    }
    theta_[c] = std::clamp(theta_[c], lo, hi);
    return 0.0;
  }

  const paircomp::Dataset& ds_;
  paircomp::Model model_;
  int t_;
  int dim_ = 0;
  std::vector<double> theta_;
};

// ---------------------------------------------------------------------------
// Files and processes.

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

#ifdef PAIRCOMP_TEST_DATA_DIR
inline std::string data_path(const std::string& name) {
  return std::string(PAIRCOMP_TEST_DATA_DIR) + "/" + name;
}
#endif

#ifdef PAIRCOMP_CLI_PATH
struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args) {
  static int counter = 0;
  std::string tag = std::to_string(++counter);
  std::string out_path = "/tmp/paircomp_test_out_" + tag;
  std::string err_path = "/tmp/paircomp_test_err_" + tag;
  std::string cmd = std::string("'") + PAIRCOMP_CLI_PATH + "'";
  for (const std::string& a : args) cmd += " '" + a + "'";
  cmd += " >" + out_path + " 2>" + err_path;
  int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = (status >= 0) ? (status >> 8) & 0xff : -1;
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}
#endif

// ---------------------------------------------------------------------------
// Minimal DOT reader for the diagram tests: collects node labels and edges
// as label pairs, so graphs can be compared by content regardless of node
// ids or emission order.

struct DotGraph {
  std::set<std::string> nodes;
  std::set<std::pair<std::string, std::string>> edges;
};

inline std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n;");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n;");
  return s.substr(b, e - b + 1);
}

inline DotGraph parse_dot(const std::string& text) {
  DotGraph g;
  std::map<std::string, std::string> label_of;
  std::vector<std::pair<std::string, std::string>> raw_edges;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t arrow = line.find("->");
    size_t label = line.find("[label=\"");
    if (arrow != std::string::npos) {
      std::string from = trim(line.substr(0, arrow));
      std::string to = trim(line.substr(arrow + 2));
      if (!from.empty() && !to.empty()) raw_edges.emplace_back(from, to);
    } else if (label != std::string::npos) {
      std::string id = trim(line.substr(0, line.find('[')));
      size_t start = label + 8;
      size_t end = line.find('"', start);
      if (!id.empty() && end != std::string::npos)
        label_of[id] = line.substr(start, end - start);
    }
  }
  for (auto& [id, lab] : label_of) g.nodes.insert(lab);
  for (auto& [from, to] : raw_edges) {
    auto fi = label_of.find(from), ti = label_of.find(to);
    if (fi != label_of.end() && ti != label_of.end())
      g.edges.emplace(fi->second, ti->second);
  }
  return g;
}

inline bool same_graph(const DotGraph& a, const DotGraph& b) {
  return a.nodes == b.nodes && a.edges == b.edges;
}

// ---------------------------------------------------------------------------
// Reader for the fixed-width tables the renderer emits: cells are
// right-aligned under their header token.  Returns rows keyed by the row
// name, each a vector of trimmed cell strings in header column order.

struct TextTable {
  std::vector<std::string> columns;
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
};

inline TextTable read_table(const std::string& text) {
  TextTable table;
  std::istringstream in(text);
  std::string header;
  while (std::getline(in, header) && trim(header).empty()) {
  }
  std::vector<size_t> ends;  // end position of each header token
  {
    size_t pos = 0;
    while (pos < header.size()) {
      while (pos < header.size() && header[pos] == ' ') ++pos;
      if (pos >= header.size()) break;
      size_t start = pos;
      while (pos < header.size() && header[pos] != ' ') ++pos;
      table.columns.push_back(header.substr(start, pos - start));
      ends.push_back(pos);
    }
  }
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) break;
    std::string rest = trim(line);
    size_t name_len = rest.find(' ');
    std::string name =
        (name_len == std::string::npos) ? rest : rest.substr(0, name_len);
    std::vector<std::string> cells;
    size_t prev = line.find(name) + name.size();
    for (size_t c = 0; c < ends.size(); ++c) {
      size_t end = std::min(ends[c], line.size());
      std::string cell =
          (prev < line.size()) ? line.substr(prev, end > prev ? end - prev : 0)
                               : "";
      cells.push_back(trim(cell));
      prev = end;
    }
    table.rows.emplace_back(name, cells);
  }
  return table;
}

}  // namespace testsupport
