#pragma once

// Game records for paired-comparison data, plus parsing/serialization and the
// aggregate counts the estimation routines consume.
//
// Counts are stored doubled (2 units per game) so that the ties-as-half-wins
// transform keeps all aggregates integral: a tied game then contributes one
// doubled unit of win credit to each side instead of half a unit.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace paircomp {

enum class Model { Basic, SingleOrder, TeamOrder, SingleTie, TeamTie };

// "basic", "single-order", "team-order", "single-tie", "team-tie"
Model model_from_string(const std::string& name);
std::string to_string(Model model);
bool model_allows_ties(Model model);

enum class Outcome { FirstWins, SecondWins, Tie };

struct Game {
  int first = 0;   // first-listed team; the home side when order matters
  int second = 0;
  Outcome outcome = Outcome::FirstWins;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class Dataset {
 public:
  // Builds aggregates and validates: distinct sides per game, indices in
  // range, ties only when the model allows them or half_win is set.
  Dataset(std::vector<std::string> teams, std::vector<Game> games, Model model,
          bool half_win = false);

  int team_count() const { return static_cast<int>(teams_.size()); }
  const std::vector<std::string>& teams() const { return teams_; }
  const std::string& team(int i) const { return teams_[i]; }
  int index_of(const std::string& label) const;  // -1 if absent
  const std::vector<Game>& games() const { return games_; }
  bool half_win() const { return half_win_; }
  bool has_ties() const { return raw_ties_total_ > 0; }

  // Doubled raw counts over ordered listings (first index = first-listed team).
  long long first_wins2(int i, int j) const { return fw2_[idx(i, j)]; }
  long long second_wins2(int i, int j) const { return sw2_[idx(i, j)]; }
  long long ties2(int i, int j) const { return tie2_[idx(i, j)]; }

  // Effective aggregates in game units, with half-win credit applied when the
  // transform is active.  n_ij and y_ij0 are orientation-free.
  double games_between(int i, int j) const;       // n_ij
  double wins_of_over(int i, int j) const;        // y_ij, win credit any venue
  double ties_between(int i, int j) const;        // y_ij0 (0 under half-win)
  double ordered_games(int i, int j) const;       // m_ij, games listed (i,j)
  double home_wins(int i, int j) const;           // first-listed credit in (i,j)
  double visitor_wins(int i, int j) const;        // second-listed credit in (i,j)

  // Raw per-team won-lost-tied record (half-win credit not applied).
  struct Record {
    double wins = 0, losses = 0, ties = 0;
  };
  Record record(int i) const;

 private:
  int idx(int i, int j) const { return i * team_count() + j; }

  std::vector<std::string> teams_;
  std::vector<Game> games_;
  bool half_win_ = false;
  long long raw_ties_total_ = 0;
  std::vector<long long> fw2_, sw2_, tie2_;
};

// CSV rows "first,second,outcome" with outcome 1 (first wins), 2 (second
// wins), 0 (tie); W/L/T accepted as synonyms.  '#' starts a comment line.
// Team indices are assigned in first-appearance order.
Dataset parse_dataset(std::istream& in, Model model, bool half_win = false);
Dataset parse_dataset(const std::string& text, Model model,
                      bool half_win = false);
Dataset parse_dataset_file(const std::string& path, Model model,
                           bool half_win = false);

// One row per game with outcome tokens normalized to 1/2/0.
void write_csv(std::ostream& out, const Dataset& dataset);
std::string to_csv(const Dataset& dataset);

// Marks tied games as half a win for each side.  The game list is unchanged;
// the effective aggregates and downstream likelihoods credit each tie with
// half a win per side.
Dataset apply_half_win_transform(const Dataset& dataset);

}  // namespace paircomp
