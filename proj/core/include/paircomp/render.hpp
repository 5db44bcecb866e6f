#pragma once

// Text, JSON, and DOT renderings of separation, fit, and summary results.
// All output is deterministic: fixed orders, fixed widths, no locale use.

#include <optional>
#include <string>

#include "paircomp/estimation.hpp"
#include "paircomp/separation.hpp"
#include "paircomp/summary.hpp"

namespace paircomp {

// Item-by-item relation matrix ("==", ">>", "<<", "><").  The team-tie model
// prints the team block and the signed block as two tables.
std::string render_relation_table(const SeparationResult& sep);

// Step-numbered reachability table(s): cell = step that introduced the edge,
// with one '*' per extra outer iteration ("3", "6*", ...).
std::string render_provenance_table(const SeparationResult& sep);

// Classes, global classification, and the diagram's dominance edges.
std::string render_separation_text(const SeparationResult& sep,
                                   bool provenance);

// Fitted parameters plus the probability table (3 decimals).
std::string render_fit_text(const FitResult& fit, const ProbMatrix& matrix);

// Standings: W-L-T record, outcome proportions for tie models, RRWP and
// RRPPG, ordered by rank().
std::string render_standings(const RoundRobinSummary& summary,
                             const Dataset& dataset);

// DOT digraph of the class/dominance diagram.  One node per class labelled
// with the member names (comma-joined); classes larger than others_threshold
// are labelled "Others (n)".  When a summary is supplied, nodes are emitted
// in descending class RRWP order (mean over member teams).
std::string render_dot(const SeparationResult& sep,
                       const RoundRobinSummary* summary = nullptr,
                       int others_threshold = 6);

// JSON documents (full precision; stable key order).
std::string separation_json(const SeparationResult& sep, bool provenance);
std::string fit_json(const FitResult& fit, const ProbMatrix& matrix,
                     const ResidualReport& residuals);
std::string standings_json(const RoundRobinSummary& summary,
                           const Dataset& dataset);

}  // namespace paircomp
