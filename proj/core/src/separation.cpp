#include "paircomp/separation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace paircomp {

namespace {

// Plain bit matrix used as scratch space by the closure routines.
struct BitMatrix {
  int n = 0;
  int words = 0;
  std::vector<uint64_t> bits;

  explicit BitMatrix(int size)
      : n(size),
        words((size + 63) / 64),
        bits(static_cast<size_t>(size) * ((size + 63) / 64), 0) {}

  bool get(int i, int j) const {
    return (bits[static_cast<size_t>(i) * words + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(int i, int j) {
    bits[static_cast<size_t>(i) * words + (j >> 6)] |= uint64_t{1} << (j & 63);
  }
  void clear(int i, int j) {
    bits[static_cast<size_t>(i) * words + (j >> 6)] &=
        ~(uint64_t{1} << (j & 63));
  }
  uint64_t* row(int i) { return bits.data() + static_cast<size_t>(i) * words; }
  const uint64_t* row(int i) const {
    return bits.data() + static_cast<size_t>(i) * words;
  }
};

BitMatrix bits_of(const ItemGraph& g) {
  BitMatrix m(g.size());
  for (int i = 0; i < g.size(); ++i)
    std::copy(g.row(i), g.row(i) + g.words_per_row(), m.row(i));
  return m;
}

// Warshall closure over the bit rows (adds paths of length >= 2).
void close_bits(BitMatrix& m) {
  for (int k = 0; k < m.n; ++k)
    for (int i = 0; i < m.n; ++i) {
      if (i == k || !m.get(i, k)) continue;
      uint64_t* ri = m.row(i);
      const uint64_t* rk = m.row(k);
      for (int w = 0; w < m.words; ++w) ri[w] |= rk[w];
    }
}

// Closes the index range [lo, hi) in place; new edges get (step, iteration).
bool close_range(ItemGraph& g, int lo, int hi, int step, int iteration) {
  const int n = hi - lo;
  BitMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.reach(lo + i, lo + j)) m.set(i, j);
  close_bits(m);
  bool added = false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.get(i, j)) added |= g.add_edge(lo + i, lo + j, step, iteration);
  return added;
}

bool close_in_place(ItemGraph& g, int step, int iteration) {
  return close_range(g, 0, g.size(), step, iteration);
}

// Chaining step used by the models whose two item blocks share a parameter:
// same-team cross links (i, t+i) / (t+i, i) never start or continue a chain,
// they may only be appended as the final hop.  Repeats until stable because
// a fresh chain can establish a new same-team link for another team.
bool closure_without_leading_hop(ItemGraph& g, int t, int iteration) {
  const int n = g.size();
  bool added_any = false;
  for (;;) {
    BitMatrix c = bits_of(g);
    for (int i = 0; i < t; ++i) {
      c.clear(i, t + i);
      c.clear(t + i, i);
    }
    close_bits(c);
    BitMatrix target = c;
    for (int i = 0; i < t; ++i) {
      if (g.reach(i, t + i))
        for (int x = 0; x < n; ++x)
          if (c.get(x, i)) target.set(x, t + i);
      if (g.reach(t + i, i))
        for (int x = 0; x < n; ++x)
          if (c.get(x, t + i)) target.set(x, i);
    }
    bool changed = false;
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        if (target.get(k, l)) changed |= g.add_edge(k, l, 3, iteration);
    added_any |= changed;
    if (!changed) return added_any;
  }
}

int universe_size(Model model, int teams) {
  switch (model) {
    case Model::Basic:
      return teams;
    case Model::SingleOrder:
    case Model::TeamOrder:
    case Model::SingleTie:
      return 2 * teams;
    case Model::TeamTie:
      return 3 * teams;
  }
  return teams;
}

// Longest dominance chain strictly below each class (sinks are level 0).
std::vector<int> chain_levels(const ItemGraph& closure,
                              const std::vector<std::vector<int>>& members) {
  const int m = static_cast<int>(members.size());
  std::vector<int> level(m, -1);
  // Dominance between classes is a strict partial order, so the recursion
  // terminates; memoization keeps it linear in the number of class pairs.
  auto eval = [&](auto&& self, int x) -> int {
    if (level[x] >= 0) return level[x];
    int best = 0;
    for (int y = 0; y < m; ++y) {
      if (y == x) continue;
      if (closure.reach(members[x][0], members[y][0]))
        best = std::max(best, 1 + self(self, y));
    }
    return level[x] = best;
  };
  for (int x = 0; x < m; ++x) eval(eval, x);
  return level;
}

// Mutual-reachability classes in canonical order: level descending, then
// smallest member ascending; members listed in ascending item order.
void build_classes(SeparationResult& r) {
  const int n = r.closure.size();
  std::vector<int> raw(n, -1);
  std::vector<std::vector<int>> members;
  for (int i = 0; i < n; ++i) {
    if (raw[i] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    for (int j = i; j < n; ++j)
      if (raw[j] < 0 && r.closure.reach(i, j) && r.closure.reach(j, i)) {
        raw[j] = id;
        members[id].push_back(j);
      }
  }
  std::vector<int> level = chain_levels(r.closure, members);
  std::vector<int> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (level[x] != level[y]) return level[x] > level[y];
    return members[x][0] < members[y][0];
  });
  r.classes.clear();
  r.class_of.assign(n, 0);
  for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
    r.classes.push_back(members[order[pos]]);
    for (int item : r.classes.back()) r.class_of[item] = pos;
  }
}

GlobalSeparation classify_global(const SeparationResult& r) {
  const int t = static_cast<int>(r.teams.size());
  const bool ties = model_allows_ties(r.model);
  const int kinds[3] = {1, 2, 0};
  const int n_kinds = ties ? 3 : 2;
  bool any_pending = false;
  bool any_degenerate = false;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (i == j) continue;
      for (int ki = 0; ki < n_kinds; ++ki) {
        if (outcome_status(r, i, j, kinds[ki]) == OutcomeStatus::Pending)
          any_pending = true;
        else
          any_degenerate = true;
      }
    }
  if (!any_pending) return GlobalSeparation::CompleteSeparation;
  if (!any_degenerate) return GlobalSeparation::Overlap;
  return GlobalSeparation::QuasiCompleteSeparation;
}

}  // namespace

std::string to_string(PairRelation rel) {
  switch (rel) {
    case PairRelation::Equiv:
      return "==";
    case PairRelation::Dominates:
      return ">>";
    case PairRelation::DominatedBy:
      return "<<";
    case PairRelation::Incomparable:
      return "><";
  }
  return "??";
}

std::string to_string(GlobalSeparation global) {
  switch (global) {
    case GlobalSeparation::CompleteSeparation:
      return "complete-separation";
    case GlobalSeparation::QuasiCompleteSeparation:
      return "quasi-complete-separation";
    case GlobalSeparation::Overlap:
      return "overlap";
  }
  return "??";
}

ItemGraph::ItemGraph(int size)
    : size_(size),
      words_((size + 63) / 64),
      rows_(static_cast<size_t>(size) * ((size + 63) / 64), 0),
      step_(static_cast<size_t>(size) * size, 0),
      iter_(static_cast<size_t>(size) * size, 0) {}

bool ItemGraph::add_edge(int k, int l, int step, int iteration) {
  if (reach(k, l)) return false;
  rows_[static_cast<size_t>(k) * words_ + (l >> 6)] |= uint64_t{1}
                                                       << (l & 63);
  step_[static_cast<size_t>(k) * size_ + l] = static_cast<uint8_t>(step);
  iter_[static_cast<size_t>(k) * size_ + l] = static_cast<uint8_t>(iteration);
  return true;
}

long long ItemGraph::edge_count() const {
  long long count = 0;
  for (uint64_t word : rows_) count += std::popcount(word);
  return count;
}

std::string ItemGraph::edge_label(int k, int l) const {
  if (!reach(k, l)) return "";
  std::string label = std::to_string(edge_step(k, l));
  label.append(static_cast<size_t>(std::max(0, edge_iteration(k, l) - 1)),
               '*');
  return label;
}

PairRelation SeparationResult::relation(int k, int l) const {
  const bool forward = closure.reach(k, l);
  const bool backward = closure.reach(l, k);
  if (forward && backward) return PairRelation::Equiv;
  if (forward) return PairRelation::Dominates;
  if (backward) return PairRelation::DominatedBy;
  return PairRelation::Incomparable;
}

PairRelation SeparationResult::team_relation(int i, int j) const {
  switch (model) {
    case Model::Basic:
    case Model::TeamTie:
      return relation(i, j);
    case Model::SingleTie:
      return relation(plus_item(i), plus_item(j));
    case Model::SingleOrder:
    case Model::TeamOrder:
      break;
  }
  throw std::logic_error(
      "team_relation: the order models decide per venue pairing, not per "
      "team pair");
}

std::string SeparationResult::item_name(int k) const {
  std::string name = teams[items[k].team];
  switch (items[k].dec) {
    case Decoration::None:
      break;
    case Decoration::Home:
      name += "H";
      break;
    case Decoration::Visitor:
      name += "V";
      break;
    case Decoration::Plus:
      name += "+";
      break;
    case Decoration::Minus:
      name += "-";
      break;
  }
  return name;
}

int SeparationResult::road_item(int team) const {
  return static_cast<int>(teams.size()) + team;
}

int SeparationResult::plus_item(int team) const {
  const int t = static_cast<int>(teams.size());
  return model == Model::TeamTie ? t + team : team;
}

int SeparationResult::minus_item(int team) const {
  const int t = static_cast<int>(teams.size());
  return model == Model::TeamTie ? 2 * t + team : t + team;
}

ItemGraph direct_relations(const Dataset& dataset, Model model) {
  const int t = dataset.team_count();
  ItemGraph g(universe_size(model, t));
  for (int k = 0; k < g.size(); ++k) g.add_edge(k, k, 1, 1);
  switch (model) {
    case Model::Basic:
      for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
          if (i == j) continue;
          if (dataset.wins_of_over(i, j) > 0.0) g.add_edge(i, j, 2, 1);
        }
      break;
    case Model::SingleOrder:
    case Model::TeamOrder:
      for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
          if (i == j) continue;
          if (dataset.home_wins(i, j) > 0.0) g.add_edge(i, t + j, 2, 1);
          if (dataset.visitor_wins(i, j) > 0.0) g.add_edge(t + j, i, 2, 1);
        }
      break;
    case Model::SingleTie:
      for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
          if (i == j) continue;
          if (dataset.wins_of_over(i, j) > 0.0) {
            g.add_edge(i, j, 2, 1);
            g.add_edge(t + i, t + j, 2, 1);
            g.add_edge(t + i, j, 2, 1);
          }
          if (i < j && dataset.ties_between(i, j) > 0.0) {
            g.add_edge(i, t + j, 2, 1);
            g.add_edge(j, t + i, 2, 1);
          }
        }
      break;
    case Model::TeamTie:
      for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
          if (i == j) continue;
          if (dataset.wins_of_over(i, j) > 0.0) {
            g.add_edge(i, j, 2, 1);
            g.add_edge(2 * t + i, t + j, 2, 1);
          }
          if (i < j && dataset.ties_between(i, j) > 0.0) {
            g.add_edge(t + i, 2 * t + j, 2, 1);
            g.add_edge(t + j, 2 * t + i, 2, 1);
          }
        }
      break;
  }
  return g;
}

ItemGraph transitive_closure(const ItemGraph& graph, int step, int iteration) {
  ItemGraph out = graph;
  close_in_place(out, step, iteration);
  return out;
}

bool propagate_order(ItemGraph& graph, int teams, int iteration) {
  const int t = teams;
  bool added = false;

  // Step 4: relations "home item over road item" projected onto teams; any
  // cycle forces every team's home item above its own road item.
  {
    BitMatrix cross(t);
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        if (graph.reach(i, t + j)) cross.set(i, j);
    close_bits(cross);
    bool cycle = false;
    for (int i = 0; i < t; ++i) cycle = cycle || cross.get(i, i);
    if (cycle)
      for (int i = 0; i < t; ++i) added |= graph.add_edge(i, t + i, 4, iteration);
  }

  // Step 5: the same with the venues swapped.
  {
    BitMatrix cross(t);
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        if (graph.reach(t + i, j)) cross.set(i, j);
    close_bits(cross);
    bool cycle = false;
    for (int i = 0; i < t; ++i) cycle = cycle || cross.get(i, i);
    if (cycle)
      for (int i = 0; i < t; ++i) added |= graph.add_edge(t + i, i, 5, iteration);
  }

  // Step 6: a relation between two teams' home items holds exactly when the
  // relation between their road items does.  Snapshot first so additions do
  // not chain within the pass.
  {
    std::vector<std::pair<int, int>> wanted;
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) {
        if (i == j) continue;
        if (graph.reach(i, j) || graph.reach(t + i, t + j))
          wanted.emplace_back(i, j);
      }
    for (auto [i, j] : wanted) {
      added |= graph.add_edge(i, j, 6, iteration);
      added |= graph.add_edge(t + i, t + j, 6, iteration);
    }
  }
  return added;
}

bool propagate_team_tie(ItemGraph& graph, int teams, int iteration) {
  const int t = teams;
  const auto plus = [t](int i) { return t + i; };
  const auto minus = [t](int i) { return 2 * t + i; };
  bool added = false;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (i == j) continue;
      if (graph.reach(i, j)) {
        if (graph.reach(plus(j), plus(i)))
          added |= graph.add_edge(minus(i), minus(j), 4, iteration);
        if (graph.reach(plus(j), minus(i)))
          added |= graph.add_edge(plus(i), minus(j), 4, iteration);
        if (graph.reach(minus(j), plus(i)))
          added |= graph.add_edge(minus(i), plus(j), 4, iteration);
        if (graph.reach(minus(j), minus(i)))
          added |= graph.add_edge(plus(i), plus(j), 4, iteration);
      }
      if (graph.reach(plus(i), plus(j)) && graph.reach(minus(i), minus(j)))
        added |= graph.add_edge(i, j, 4, iteration);
      if (graph.reach(plus(i), minus(j)) && graph.reach(minus(i), plus(j)))
        added |= graph.add_edge(i, j, 4, iteration);
    }
  return added;
}

SeparationResult saturate(const Dataset& dataset, Model model) {
  SeparationResult r;
  r.model = model;
  r.teams = dataset.teams();
  const int t = dataset.team_count();

  r.items.clear();
  switch (model) {
    case Model::Basic:
      for (int i = 0; i < t; ++i) r.items.push_back({i, Decoration::None});
      break;
    case Model::SingleOrder:
    case Model::TeamOrder:
      for (int i = 0; i < t; ++i) r.items.push_back({i, Decoration::Home});
      for (int i = 0; i < t; ++i) r.items.push_back({i, Decoration::Visitor});
      break;
    case Model::SingleTie:
      for (int i = 0; i < t; ++i) r.items.push_back({i, Decoration::Plus});
      for (int i = 0; i < t; ++i) r.items.push_back({i, Decoration::Minus});
      break;
    case Model::TeamTie:
      for (int i = 0; i < t; ++i) r.items.push_back({i, Decoration::None});
      for (int i = 0; i < t; ++i) r.items.push_back({i, Decoration::Plus});
      for (int i = 0; i < t; ++i) r.items.push_back({i, Decoration::Minus});
      break;
  }

  ItemGraph g = direct_relations(dataset, model);
  switch (model) {
    case Model::Basic:
    case Model::TeamOrder: {
      close_in_place(g, 3, 1);
      r.outer_iterations = 1;
      break;
    }
    case Model::SingleOrder:
    case Model::SingleTie: {
      int iteration = 0;
      bool changed = true;
      while (changed) {
        ++iteration;
        changed = closure_without_leading_hop(g, t, iteration);
        changed = propagate_order(g, t, iteration) || changed;
      }
      r.outer_iterations = iteration;
      break;
    }
    case Model::TeamTie: {
      int iteration = 0;
      bool changed = true;
      while (changed) {
        ++iteration;
        changed = close_range(g, 0, t, 3, iteration);
        changed = close_range(g, t, 3 * t, 3, iteration) || changed;
        changed = propagate_team_tie(g, t, iteration) || changed;
      }
      r.outer_iterations = iteration;
      break;
    }
  }
  r.closure = std::move(g);
  build_classes(r);
  r.global = classify_global(r);
  return r;
}

PairRelation pair_relation(const SeparationResult& result, int k, int l) {
  return result.relation(k, l);
}

OutcomeStatus outcome_status(const SeparationResult& sep, int i, int j,
                             int k) {
  using PR = PairRelation;
  PR row = PR::Incomparable;
  PR col = PR::Incomparable;
  switch (sep.model) {
    case Model::Basic:
      row = col = (k == 1) ? sep.relation(i, j) : sep.relation(j, i);
      break;
    case Model::SingleOrder:
    case Model::TeamOrder: {
      const int home = sep.home_item(i);
      const int road = sep.road_item(j);
      row = col =
          (k == 1) ? sep.relation(home, road) : sep.relation(road, home);
      break;
    }
    case Model::SingleTie:
    case Model::TeamTie:
      if (k == 1) {
        row = sep.relation(sep.minus_item(i), sep.plus_item(j));
        col = sep.team_relation(i, j);
      } else if (k == 2) {
        row = sep.relation(sep.minus_item(j), sep.plus_item(i));
        col = sep.team_relation(j, i);
      } else {
        row = sep.relation(sep.plus_item(j), sep.minus_item(i));
        col = sep.relation(sep.plus_item(i), sep.minus_item(j));
      }
      break;
  }
  if (col == PR::DominatedBy || row == PR::DominatedBy)
    return OutcomeStatus::Zero;
  if (row == PR::Dominates && col == PR::Dominates) return OutcomeStatus::One;
  const bool row_held = (row == PR::Dominates || row == PR::Equiv);
  const bool col_held = (col == PR::Dominates || col == PR::Equiv);
  if (row_held && col_held) return OutcomeStatus::Pending;
  return OutcomeStatus::Arbitrary;
}

std::vector<int> assign_levels(const SeparationResult& result) {
  std::vector<int> levels = chain_levels(result.closure, result.classes);
  std::vector<int> out(result.item_count());
  for (int k = 0; k < result.item_count(); ++k)
    out[k] = levels[result.class_of[k]];
  return out;
}

ClassDiagram class_diagram(const SeparationResult& result) {
  const int t = static_cast<int>(result.teams.size());

  // Display universe: classes of display units plus a dominance test.
  std::vector<std::vector<int>> groups;  // member display units, ascending
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<int>> group_teams;

  const bool team_view =
      (result.model == Model::Basic || result.model == Model::SingleTie ||
       result.model == Model::TeamTie);

  auto unit_relation = [&](int u, int v) {
    return team_view ? result.team_relation(u, v) : result.relation(u, v);
  };
  const int units = team_view ? t : result.item_count();

  std::vector<int> group_of(units, -1);
  for (int u = 0; u < units; ++u) {
    if (group_of[u] >= 0) continue;
    const int id = static_cast<int>(groups.size());
    groups.emplace_back();
    for (int v = u; v < units; ++v)
      if (group_of[v] < 0 && unit_relation(u, v) == PairRelation::Equiv) {
        group_of[v] = id;
        groups[id].push_back(v);
      }
  }

  const int m = static_cast<int>(groups.size());
  std::vector<std::vector<char>> dom(m, std::vector<char>(m, 0));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (x != y)
        dom[x][y] =
            unit_relation(groups[x][0], groups[y][0]) == PairRelation::Dominates;

  // Longest chain below each group, then the canonical ordering.
  std::vector<int> level(m, -1);
  auto eval = [&](auto&& self, int x) -> int {
    if (level[x] >= 0) return level[x];
    int best = 0;
    for (int y = 0; y < m; ++y)
      if (dom[x][y]) best = std::max(best, 1 + self(self, y));
    return level[x] = best;
  };
  for (int x = 0; x < m; ++x) eval(eval, x);

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (level[x] != level[y]) return level[x] > level[y];
    return groups[x][0] < groups[y][0];
  });
  std::vector<int> position(m);
  for (int pos = 0; pos < m; ++pos) position[order[pos]] = pos;

  ClassDiagram diagram;
  diagram.node_labels.resize(m);
  diagram.node_teams.resize(m);
  for (int x = 0; x < m; ++x) {
    const int pos = position[x];
    for (int u : groups[x]) {
      if (team_view) {
        diagram.node_labels[pos].push_back(result.teams[u]);
        diagram.node_teams[pos].push_back(u);
      } else {
        diagram.node_labels[pos].push_back(result.item_name(u));
        diagram.node_teams[pos].push_back(result.items[u].team);
      }
    }
  }

  // Transitive reduction of the group dominance order.
  for (int pos_u = 0; pos_u < m; ++pos_u)
    for (int pos_v = 0; pos_v < m; ++pos_v) {
      const int u = order[pos_u];
      const int v = order[pos_v];
      if (!dom[u][v]) continue;
      bool shortcut = false;
      for (int w = 0; w < m && !shortcut; ++w)
        shortcut = dom[u][w] && dom[w][v];
      if (!shortcut) diagram.edges.emplace_back(pos_u, pos_v);
    }
  return diagram;
}

}  // namespace paircomp
