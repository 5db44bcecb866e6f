#include "paircomp/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace paircomp {

namespace {

using nlohmann::json;

std::string fmt(const char* spec, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, value);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Fixed-width matrix layout: one label column, then one field per column
// header.  Every cell is right-aligned under the end of its header token,
// so the table parses back unambiguously whatever the cell widths are.
std::string format_table(const std::vector<std::string>& row_names,
                         const std::vector<std::string>& col_names,
                         const std::vector<std::vector<std::string>>& cells) {
  size_t label_w = 0;
  for (const auto& name : row_names) label_w = std::max(label_w, name.size());
  std::vector<size_t> width(col_names.size());
  for (size_t c = 0; c < col_names.size(); ++c) {
    width[c] = col_names[c].size();
    for (size_t r = 0; r < cells.size(); ++r)
      width[c] = std::max(width[c], cells[r][c].size());
  }
  std::string out;
  auto put = [&](const std::string& text, size_t field) {
    out.append(1 + field - text.size(), ' ');
    out += text;
  };
  out.append(label_w, ' ');
  for (size_t c = 0; c < col_names.size(); ++c) put(col_names[c], width[c]);
  out += '\n';
  for (size_t r = 0; r < row_names.size(); ++r) {
    out += row_names[r];
    out.append(label_w - row_names[r].size(), ' ');
    for (size_t c = 0; c < col_names.size(); ++c) put(cells[r][c], width[c]);
    out += '\n';
  }
  return out;
}

// One relation or step-label matrix over the item range [lo, hi).
std::string item_block(const SeparationResult& sep, int lo, int hi,
                       bool provenance) {
  std::vector<std::string> names;
  names.reserve(hi - lo);
  for (int k = lo; k < hi; ++k) names.push_back(sep.item_name(k));
  std::vector<std::vector<std::string>> cells(names.size());
  for (int k = lo; k < hi; ++k) {
    cells[k - lo].reserve(names.size());
    for (int l = lo; l < hi; ++l)
      cells[k - lo].push_back(provenance ? sep.closure.edge_label(k, l)
                                         : to_string(sep.relation(k, l)));
  }
  return format_table(names, names, cells);
}

// The team-tie universe splits into two disjoint blocks; everything else is
// a single table.
std::string matrix_tables(const SeparationResult& sep, bool provenance) {
  if (sep.model == Model::TeamTie) {
    int t = static_cast<int>(sep.teams.size());
    std::string out = "teams:\n";
    out += item_block(sep, 0, t, provenance);
    out += "\nsigned items:\n";
    out += item_block(sep, t, 3 * t, provenance);
    return out;
  }
  return item_block(sep, 0, sep.item_count(), provenance);
}

std::string tag_word(const ProbEstimate& e) {
  switch (e.tag) {
    case ProbTag::One:
      return "one";
    case ProbTag::Zero:
      return "zero";
    case ProbTag::Arbitrary:
      return "arbitrary";
    default:
      return "";
  }
}

std::string prob_cell(const ProbEstimate& e) {
  return e.determined() ? fmt("%.3f", e.value) : tag_word(e);
}

bool order_model(Model model) {
  return model == Model::SingleOrder || model == Model::TeamOrder;
}

std::string escape_label(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '\\' || ch == '"') out += '\\';
    out += ch;
  }
  return out;
}

json relation_rows(const SeparationResult& sep, int lo, int hi,
                   bool provenance) {
  json rows = json::array();
  for (int k = lo; k < hi; ++k) {
    json row = json::array();
    for (int l = lo; l < hi; ++l)
      row.push_back(provenance ? sep.closure.edge_label(k, l)
                               : to_string(sep.relation(k, l)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json named_values(const std::vector<std::string>& names,
                  const std::vector<double>& values) {
  json obj = json::object();
  for (size_t i = 0; i < names.size(); ++i) obj[names[i]] = values[i];
  return obj;
}

int team_index(const Dataset& dataset, const std::string& label) {
  int idx = dataset.index_of(label);
  if (idx < 0)
    throw std::invalid_argument("team '" + label + "' is not in the dataset");
  return idx;
}

}  // namespace

std::string render_relation_table(const SeparationResult& sep) {
  return matrix_tables(sep, false);
}

std::string render_provenance_table(const SeparationResult& sep) {
  return matrix_tables(sep, true);
}

std::string render_separation_text(const SeparationResult& sep,
                                   bool provenance) {
  std::string out;
  out += "model: " + to_string(sep.model) + '\n';
  out += "teams: " + std::to_string(sep.teams.size()) +
         ", items: " + std::to_string(sep.item_count()) + '\n';
  out += "global: " + to_string(sep.global) + '\n';
  out += "outer iterations: " + std::to_string(sep.outer_iterations) + "\n\n";

  std::vector<int> levels = assign_levels(sep);
  std::vector<int> order(sep.classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return levels[sep.classes[x][0]] > levels[sep.classes[y][0]];
  });
  out += "equivalence classes, strongest level first:\n";
  for (int ci : order) {
    std::vector<std::string> members;
    members.reserve(sep.classes[ci].size());
    for (int k : sep.classes[ci]) members.push_back(sep.item_name(k));
    out += "  level " + std::to_string(levels[sep.classes[ci][0]]) + ": " +
           join(members, ", ") + '\n';
  }
  out += '\n';

  ClassDiagram diagram = class_diagram(sep);
  out += "dominance edges (transitively reduced):\n";
  if (diagram.edges.empty()) out += "  (none)\n";
  for (auto [u, v] : diagram.edges)
    out += "  [" + join(diagram.node_labels[u], ", ") + "] -> [" +
           join(diagram.node_labels[v], ", ") + "]\n";
  out += '\n';

  out += "relations:\n" + matrix_tables(sep, false);
  if (provenance)
    out +=
        "\nderivation steps ('*' marks labels added after the first "
        "pass):\n" +
        matrix_tables(sep, true);
  return out;
}

std::string render_fit_text(const FitResult& fit, const ProbMatrix& matrix) {
  std::string out;
  out += "model: " + to_string(fit.model) + '\n';
  out += std::string("converged: ") + (fit.converged ? "yes" : "NO") + " (" +
         std::to_string(fit.iterations) + " iterations)\n";
  out += "max residual: " + fmt("%.3g", fit.max_residual) + '\n';
  if (fit.separation)
    out += "separation: " + to_string(fit.separation->global) + '\n';

  out += "\nparameters:\n";
  const auto& teams = fit.teams;
  auto param_line = [&](const std::string& name, double value) {
    out += "  " + name + " = " + fmt("%.6f", value) + '\n';
  };
  if (fit.model == Model::TeamOrder) {
    for (size_t i = 0; i < teams.size(); ++i)
      param_line("home[" + teams[i] + "]", fit.home_strengths[i]);
    for (size_t i = 0; i < teams.size(); ++i)
      param_line("road[" + teams[i] + "]", fit.road_strengths[i]);
  } else {
    for (size_t i = 0; i < teams.size(); ++i)
      param_line("strength[" + teams[i] + "]", fit.strengths[i]);
    if (fit.model == Model::SingleOrder)
      param_line("home-advantage", fit.order_param);
    if (fit.model == Model::SingleTie) param_line("tie", fit.tie_param);
    if (fit.model == Model::TeamTie)
      for (size_t i = 0; i < teams.size(); ++i)
        param_line("tie[" + teams[i] + "]", fit.tie_params[i]);
  }

  int t = matrix.team_count();
  if (order_model(fit.model)) {
    out += "\nprobabilities (home win / road win), first team at home:\n";
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) {
        if (i == j) continue;
        out += "  " + teams[i] + " vs " + teams[j] + ": " +
               prob_cell(matrix.at(i, j, 1)) + " / " +
               prob_cell(matrix.at(i, j, 2)) + '\n';
      }
  } else {
    out += matrix.has_ties() ? "\nprobabilities (win / loss / tie):\n"
                             : "\nprobabilities (win / loss):\n";
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) {
        out += "  " + teams[i] + " vs " + teams[j] + ": " +
               prob_cell(matrix.at(i, j, 1)) + " / " +
               prob_cell(matrix.at(i, j, 2));
        if (matrix.has_ties()) out += " / " + prob_cell(matrix.at(i, j, 0));
        out += '\n';
      }
  }
  return out;
}

std::string render_standings(const RoundRobinSummary& summary,
                             const Dataset& dataset) {
  std::vector<int> order = rank(summary);
  bool shares = !summary.outcomes.empty();
  bool points = !summary.rrppg.empty();

  std::vector<std::string> columns = {"rank", "W", "L", "T"};
  if (shares) {
    columns.push_back("pwin");
    columns.push_back("ploss");
    columns.push_back("ptie");
  }
  columns.push_back("rrwp");
  if (points) columns.push_back("rrppg");

  std::vector<std::string> row_names;
  std::vector<std::vector<std::string>> cells;
  for (size_t pos = 0; pos < order.size(); ++pos) {
    int ti = order[pos];
    row_names.push_back(summary.teams[ti]);
    Dataset::Record rec =
        dataset.record(team_index(dataset, summary.teams[ti]));
    std::vector<std::string> row = {std::to_string(pos + 1),
                                    fmt("%g", rec.wins), fmt("%g", rec.losses),
                                    fmt("%g", rec.ties)};
    if (shares) {
      row.push_back(fmt("%.4f", summary.outcomes[ti][0]));
      row.push_back(fmt("%.4f", summary.outcomes[ti][1]));
      row.push_back(fmt("%.4f", summary.outcomes[ti][2]));
    }
    row.push_back(fmt("%.4f", summary.rrwp[ti]));
    if (points) row.push_back(fmt("%.4f", summary.rrppg[ti]));
    cells.push_back(std::move(row));
  }
  return format_table(row_names, columns, cells);
}

std::string render_dot(const SeparationResult& sep,
                       const RoundRobinSummary* summary,
                       int others_threshold) {
  ClassDiagram diagram = class_diagram(sep);
  int n = static_cast<int>(diagram.node_labels.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (summary) {
    std::vector<double> mean(n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int team : diagram.node_teams[i]) mean[i] += summary->rrwp[team];
      if (!diagram.node_teams[i].empty())
        mean[i] /= static_cast<double>(diagram.node_teams[i].size());
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return mean[x] > mean[y]; });
  }
  std::string out = "digraph separation {\n  rankdir=TB;\n";
  out += "  node [shape=box];\n";
  for (int id : order) {
    const auto& members = diagram.node_labels[id];
    std::string label =
        static_cast<int>(members.size()) > others_threshold
            ? "Others (" + std::to_string(members.size()) + ")"
            : join(members, ", ");
    out += "  n" + std::to_string(id) + " [label=\"" + escape_label(label) +
           "\"];\n";
  }
  for (auto [u, v] : diagram.edges)
    out += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string separation_json(const SeparationResult& sep, bool provenance) {
  json j;
  j["model"] = to_string(sep.model);
  j["teams"] = sep.teams;
  json items = json::array();
  for (int k = 0; k < sep.item_count(); ++k) items.push_back(sep.item_name(k));
  j["items"] = std::move(items);
  j["global"] = to_string(sep.global);
  j["outer_iterations"] = sep.outer_iterations;

  json classes = json::array();
  for (const auto& cls : sep.classes) {
    json members = json::array();
    for (int k : cls) members.push_back(sep.item_name(k));
    classes.push_back(std::move(members));
  }
  j["classes"] = std::move(classes);

  std::vector<int> lv = assign_levels(sep);
  json levels = json::object();
  for (int k = 0; k < sep.item_count(); ++k) levels[sep.item_name(k)] = lv[k];
  j["levels"] = std::move(levels);

  if (sep.model == Model::TeamTie) {
    int t = static_cast<int>(sep.teams.size());
    j["team_relations"] = relation_rows(sep, 0, t, false);
    j["sign_relations"] = relation_rows(sep, t, 3 * t, false);
    if (provenance) {
      j["team_provenance"] = relation_rows(sep, 0, t, true);
      j["sign_provenance"] = relation_rows(sep, t, 3 * t, true);
    }
  } else {
    j["relations"] = relation_rows(sep, 0, sep.item_count(), false);
    if (provenance)
      j["provenance"] = relation_rows(sep, 0, sep.item_count(), true);
  }
  return j.dump(2) + "\n";
}

std::string fit_json(const FitResult& fit, const ProbMatrix& matrix,
                     const ResidualReport& residuals) {
  json j;
  j["model"] = to_string(fit.model);
  j["teams"] = fit.teams;
  j["converged"] = fit.converged;
  j["iterations"] = fit.iterations;
  j["max_residual"] = fit.max_residual;
  if (fit.separation) j["global"] = to_string(fit.separation->global);

  json params = json::object();
  if (fit.model == Model::TeamOrder) {
    params["home_strengths"] = named_values(fit.teams, fit.home_strengths);
    params["road_strengths"] = named_values(fit.teams, fit.road_strengths);
  } else {
    params["strengths"] = named_values(fit.teams, fit.strengths);
  }
  if (fit.model == Model::SingleOrder) params["gamma"] = fit.order_param;
  if (fit.model == Model::SingleTie) params["nu"] = fit.tie_param;
  if (fit.model == Model::TeamTie)
    params["nu_i"] = named_values(fit.teams, fit.tie_params);
  if (!fit.plus_strengths.empty())
    params["plus_strengths"] = named_values(fit.teams, fit.plus_strengths);
  j["parameters"] = std::move(params);

  json probs = json::object();
  int t = matrix.team_count();
  for (int i = 0; i < t; ++i)
    for (int k = 0; k < t; ++k) {
      if (i == k) continue;
      json entry = json::object();
      auto slot = [&](int outcome) {
        const ProbEstimate& e = matrix.at(i, k, outcome);
        entry[std::to_string(outcome)] =
            e.determined() ? json{{"p", e.value}} : json(tag_word(e));
      };
      slot(1);
      slot(2);
      if (matrix.has_ties()) slot(0);
      probs[fit.teams[i] + "," + fit.teams[k]] = std::move(entry);
    }
  j["probabilities"] = std::move(probs);

  json res = json::array();
  for (const auto& eq : residuals.equations)
    res.push_back({{"name", eq.name},
                   {"observed", eq.observed},
                   {"expected", eq.expected}});
  j["residuals"] = std::move(res);
  // With no retained outcome terms every observed outcome was forced to
  // probability one, so the log-likelihood is exactly zero.  Otherwise the
  // value depends on the dataset and is left for the caller to fill in.
  j["log_likelihood"] = residuals.equations.empty() ? json(0.0) : json();
  return j.dump(2) + "\n";
}

std::string standings_json(const RoundRobinSummary& summary,
                           const Dataset& dataset) {
  json j;
  j["model"] = to_string(summary.model);
  if (summary.points)
    j["points"] = {{"win", summary.points->c1},
                   {"loss", summary.points->c2},
                   {"tie", summary.points->c0}};
  else
    j["points"] = nullptr;

  json rows = json::array();
  std::vector<int> order = rank(summary);
  for (size_t pos = 0; pos < order.size(); ++pos) {
    int ti = order[pos];
    Dataset::Record rec =
        dataset.record(team_index(dataset, summary.teams[ti]));
    json row;
    row["rank"] = static_cast<int>(pos) + 1;
    row["team"] = summary.teams[ti];
    row["wins"] = rec.wins;
    row["losses"] = rec.losses;
    row["ties"] = rec.ties;
    if (!summary.outcomes.empty()) {
      row["win_share"] = summary.outcomes[ti][0];
      row["loss_share"] = summary.outcomes[ti][1];
      row["tie_share"] = summary.outcomes[ti][2];
    }
    row["rrwp"] = summary.rrwp[ti];
    if (!summary.rrppg.empty()) row["rrppg"] = summary.rrppg[ti];
    rows.push_back(std::move(row));
  }
  j["standings"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace paircomp
