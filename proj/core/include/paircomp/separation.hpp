#pragma once

// Separation analysis: which outcome probabilities does maximum likelihood
// drive to 0 or 1, and which are left arbitrary?  The answer is read off a
// reachability relation ("beats directly or through a chain") over the
// model's item universe:
//
//   Basic        items are the t teams;
//   SingleOrder/
//   TeamOrder    2t items, team-at-home (iH) and team-on-road (iV);
//   SingleTie    2t items, i+ and i-, from the reparameterization
//                pi_{i+} = sqrt(pi_i * nu), pi_{i-} = pi_i / pi_{i+};
//   TeamTie      3t items: the t teams plus i+ and i- (pi_{i+} = sqrt(pi_i
//                nu_i)); team items and signed items form disjoint blocks.
//
// Saturation alternates transitive closure with model-specific propagation
// rules until no relation is added.  Each edge remembers the step and outer
// iteration that introduced it, so the full derivation can be printed.

#include <memory>
#include <string>
#include <vector>

#include "paircomp/dataset.hpp"

namespace paircomp {

enum class Decoration { None, Home, Visitor, Plus, Minus };

struct Item {
  int team = 0;
  Decoration dec = Decoration::None;
};

enum class PairRelation { Equiv, Dominates, DominatedBy, Incomparable };

enum class GlobalSeparation {
  CompleteSeparation,      // every outcome probability degenerate
  QuasiCompleteSeparation, // some degenerate, some pending
  Overlap                  // no degenerate outcome probabilities
};

std::string to_string(PairRelation rel);        // "==", ">>", "<<", "><"
std::string to_string(GlobalSeparation global); // "complete-separation", ...

// Dense reachability matrix with per-edge provenance.  Rows are bitsets.
class ItemGraph {
 public:
  ItemGraph() = default;
  explicit ItemGraph(int size);

  int size() const { return size_; }
  bool reach(int k, int l) const {
    return (rows_[k * words_ + (l >> 6)] >> (l & 63)) & 1u;
  }
  // Returns true if the edge was new.  step/iteration are provenance labels.
  bool add_edge(int k, int l, int step, int iteration);
  int edge_step(int k, int l) const { return step_[k * size_ + l]; }
  int edge_iteration(int k, int l) const { return iter_[k * size_ + l]; }
  long long edge_count() const;  // including self-loops

  // "3" for step 3 in the first iteration, "3*" in the second, "3**" ...;
  // empty string when there is no edge.
  std::string edge_label(int k, int l) const;

  // Internal row access for the closure routines.
  const uint64_t* row(int k) const { return rows_.data() + k * words_; }
  uint64_t* row(int k) { return rows_.data() + k * words_; }
  int words_per_row() const { return words_; }

 private:
  int size_ = 0;
  int words_ = 0;
  std::vector<uint64_t> rows_;
  std::vector<uint8_t> step_, iter_;
};

struct SeparationResult {
  Model model = Model::Basic;
  std::vector<std::string> teams;
  std::vector<Item> items;   // item k's team and decoration
  ItemGraph closure;         // saturated reachability over the items
  std::vector<int> class_of; // item -> equivalence class id
  std::vector<std::vector<int>> classes;  // class id -> member items
  GlobalSeparation global = GlobalSeparation::Overlap;
  int outer_iterations = 0;  // sweeps until the last one added nothing

  PairRelation relation(int k, int l) const;
  // Model-appropriate team-level relation: Basic and TeamTie read the team
  // items; the tie models' "i vs j" uses rel(i+, j+).  Not defined for the
  // order models (their decisions are per venue pair).
  PairRelation team_relation(int i, int j) const;
  std::string item_name(int k) const;  // "a", "aH", "a+", ...

  // Item index helpers for the model's universe.
  int item_count() const { return static_cast<int>(items.size()); }
  int home_item(int team) const { return team; }         // also i+ / team item
  int road_item(int team) const;                         // iV or i-
  int plus_item(int team) const;                         // tie models
  int minus_item(int team) const;
};

// The reflexive graph holding exactly the game-induced relations.
ItemGraph direct_relations(const Dataset& dataset, Model model);

// Smallest transitive superset; new edges are labelled (step, iteration).
ItemGraph transitive_closure(const ItemGraph& graph, int step = 3,
                             int iteration = 1);

// One pass of the order-model propagation over a 2t-item graph:
// (a) a cycle among cross relations forces iH >= iV for every team (step 4),
// (b) the same with the venues swapped (step 5),
// (c) iH >= jH if and only if iV >= jV (step 6).
// Returns true if any edge was added.
bool propagate_order(ItemGraph& graph, int teams, int iteration);

// One pass of the six team-tie inference rules over a 3t-item graph
// (teams, then +items, then -items); new edges are labelled step 4.
bool propagate_team_tie(ItemGraph& graph, int teams, int iteration);

SeparationResult saturate(const Dataset& dataset, Model model);

PairRelation pair_relation(const SeparationResult& result, int k, int l);

// What maximum likelihood does to P(outcome k) of an ordered pairing (i, j):
// forced to one, forced to zero, left arbitrary, or still to be estimated.
// k follows the data encoding: 1 first/home team wins, 2 second/visiting
// team wins, 0 tie (tie models only).  The global classification is the
// aggregate: all pending = overlap, none pending = complete separation.
enum class OutcomeStatus { One, Zero, Arbitrary, Pending };
OutcomeStatus outcome_status(const SeparationResult& sep, int i, int j, int k);

// Integer levels: equal within a class, strictly decreasing along every
// dominance edge (the length of the longest dominance chain below the class).
std::vector<int> assign_levels(const SeparationResult& result);

// The class/dominance diagram in the model's display universe: team classes
// for Basic and the tie models (the tie models' classes come from the
// team-level relation), item classes for the order models.
struct ClassDiagram {
  std::vector<std::vector<std::string>> node_labels;  // member names per node
  std::vector<std::vector<int>> node_teams;           // member team indices
  std::vector<std::pair<int, int>> edges;             // transitively reduced
};
ClassDiagram class_diagram(const SeparationResult& result);

}  // namespace paircomp
