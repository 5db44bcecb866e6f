#include "paircomp/dataset.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace paircomp {

Model model_from_string(const std::string& name) {
  if (name == "basic") return Model::Basic;
  if (name == "single-order") return Model::SingleOrder;
  if (name == "team-order") return Model::TeamOrder;
  if (name == "single-tie") return Model::SingleTie;
  if (name == "team-tie") return Model::TeamTie;
  throw std::invalid_argument("unknown model '" + name +
                              "' (expected basic, single-order, team-order, "
                              "single-tie, or team-tie)");
}

std::string to_string(Model model) {
  switch (model) {
    case Model::Basic: return "basic";
    case Model::SingleOrder: return "single-order";
    case Model::TeamOrder: return "team-order";
    case Model::SingleTie: return "single-tie";
    case Model::TeamTie: return "team-tie";
  }
  return "basic";
}

bool model_allows_ties(Model model) {
  return model == Model::SingleTie || model == Model::TeamTie;
}

Dataset::Dataset(std::vector<std::string> teams, std::vector<Game> games,
                 Model model, bool half_win)
    : teams_(std::move(teams)), games_(std::move(games)), half_win_(half_win) {
  const int t = team_count();
  if (t < 2) throw std::invalid_argument("need at least two teams");
  fw2_.assign(t * t, 0);
  sw2_.assign(t * t, 0);
  tie2_.assign(t * t, 0);
  std::vector<bool> active(t, false);
  for (const Game& g : games_) {
    if (g.first < 0 || g.first >= t || g.second < 0 || g.second >= t)
      throw std::invalid_argument("game references an unknown team");
    if (g.first == g.second)
      throw std::invalid_argument("a team cannot play itself");
    active[g.first] = active[g.second] = true;
    switch (g.outcome) {
      case Outcome::FirstWins: fw2_[idx(g.first, g.second)] += 2; break;
      case Outcome::SecondWins: sw2_[idx(g.first, g.second)] += 2; break;
      case Outcome::Tie:
        if (!model_allows_ties(model) && !half_win_)
          throw std::invalid_argument(
              "tied games need a tie-capable model or the half-win option");
        tie2_[idx(g.first, g.second)] += 2;
        ++raw_ties_total_;
        break;
    }
  }
  for (int i = 0; i < t; ++i)
    if (!active[i])
      throw std::invalid_argument("team '" + teams_[i] + "' has no games");
}

int Dataset::index_of(const std::string& label) const {
  for (int i = 0; i < team_count(); ++i)
    if (teams_[i] == label) return i;
  return -1;
}

double Dataset::games_between(int i, int j) const {
  return (fw2_[idx(i, j)] + sw2_[idx(i, j)] + tie2_[idx(i, j)] +
          fw2_[idx(j, i)] + sw2_[idx(j, i)] + tie2_[idx(j, i)]) /
         2.0;
}

double Dataset::wins_of_over(int i, int j) const {
  long long credit = fw2_[idx(i, j)] + sw2_[idx(j, i)];
  if (half_win_) credit += (tie2_[idx(i, j)] + tie2_[idx(j, i)]) / 2;
  return credit / 2.0;
}

double Dataset::ties_between(int i, int j) const {
  if (half_win_) return 0.0;
  return (tie2_[idx(i, j)] + tie2_[idx(j, i)]) / 2.0;
}

double Dataset::ordered_games(int i, int j) const {
  return (fw2_[idx(i, j)] + sw2_[idx(i, j)] + tie2_[idx(i, j)]) / 2.0;
}

double Dataset::home_wins(int i, int j) const {
  long long credit = fw2_[idx(i, j)];
  if (half_win_) credit += tie2_[idx(i, j)] / 2;
  return credit / 2.0;
}

double Dataset::visitor_wins(int i, int j) const {
  long long credit = sw2_[idx(i, j)];
  if (half_win_) credit += tie2_[idx(i, j)] / 2;
  return credit / 2.0;
}

Dataset::Record Dataset::record(int i) const {
  Record r;
  for (int j = 0; j < team_count(); ++j) {
    if (j == i) continue;
    r.wins += (fw2_[idx(i, j)] + sw2_[idx(j, i)]) / 2.0;
    r.losses += (sw2_[idx(i, j)] + fw2_[idx(j, i)]) / 2.0;
    r.ties += (tie2_[idx(i, j)] + tie2_[idx(j, i)]) / 2.0;
  }
  return r;
}

namespace {

std::string trim_field(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Outcome outcome_from_token(const std::string& token, int line) {
  if (token == "1" || token == "W" || token == "w") return Outcome::FirstWins;
  if (token == "2" || token == "L" || token == "l") return Outcome::SecondWins;
  if (token == "0" || token == "T" || token == "t") return Outcome::Tie;
  throw ParseError("unknown outcome token '" + token +
                       "' (expected 1, 2, 0, W, L, or T)",
                   line);
}

const char* outcome_token(Outcome outcome) {
  switch (outcome) {
    case Outcome::FirstWins: return "1";
    case Outcome::SecondWins: return "2";
    case Outcome::Tie: return "0";
  }
  return "1";
}

}  // namespace

Dataset parse_dataset(std::istream& in, Model model, bool half_win) {
  std::vector<std::string> teams;
  std::map<std::string, int> index;
  std::vector<Game> games;
  auto team_id = [&](const std::string& label) {
    auto [it, inserted] = index.try_emplace(label, (int)teams.size());
    if (inserted) teams.push_back(label);
    return it->second;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string stripped = trim_field(line);
    if (stripped.empty() || stripped[0] == '#') continue;

    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
      size_t comma = line.find(',', start);
      fields.push_back(trim_field(line.substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 3)
      throw ParseError("expected 'first,second,outcome'", line_no);
    if (fields[0].empty() || fields[1].empty())
      throw ParseError("empty team name", line_no);
    if (fields[0] == fields[1])
      throw ParseError("a team cannot play itself", line_no);

    Outcome outcome = outcome_from_token(fields[2], line_no);
    if (outcome == Outcome::Tie && !model_allows_ties(model) && !half_win)
      throw ParseError(
          "tied game under a model without ties; use a tie-capable model "
          "or the half-win option",
          line_no);
    games.push_back({team_id(fields[0]), team_id(fields[1]), outcome});
  }
  if (games.empty()) throw ParseError("no games found", 0);
  return Dataset(std::move(teams), std::move(games), model, half_win);
}

Dataset parse_dataset(const std::string& text, Model model, bool half_win) {
  std::istringstream in(text);
  return parse_dataset(in, model, half_win);
}

Dataset parse_dataset_file(const std::string& path, Model model,
                           bool half_win) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path, 0);
  return parse_dataset(in, model, half_win);
}

void write_csv(std::ostream& out, const Dataset& dataset) {
  for (const Game& g : dataset.games())
    out << dataset.team(g.first) << ',' << dataset.team(g.second) << ','
        << outcome_token(g.outcome) << '\n';
}

std::string to_csv(const Dataset& dataset) {
  std::ostringstream out;
  write_csv(out, dataset);
  return out.str();
}

Dataset apply_half_win_transform(const Dataset& dataset) {
  return Dataset(dataset.teams(), dataset.games(), Model::Basic, true);
}

}  // namespace paircomp
