#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "paircomp/dataset.hpp"
#include "paircomp/estimation.hpp"
#include "paircomp/separation.hpp"
#include "paircomp/summary.hpp"

namespace {

using namespace paircomp;

std::vector<std::string> team_labels(int teams) {
  std::vector<std::string> labels;
  labels.reserve(teams);
  for (int i = 0; i < teams; ++i) labels.push_back("t" + std::to_string(i));
  return labels;
}

// Mutual wins around a cycle keep every team in one overlap component, so
// the fit benchmarks measure real iteration work instead of degeneracy
// shortcuts; the random games on top vary the schedule shape.
Dataset connected_dataset(int teams, int games, Model model, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Game> list;
  list.reserve(2 * teams + games);
  for (int i = 0; i < teams; ++i) {
    list.push_back({i, (i + 1) % teams, Outcome::FirstWins});
    list.push_back({(i + 1) % teams, i, Outcome::FirstWins});
  }
  std::uniform_int_distribution<int> pick(0, teams - 1);
  int faces = model_allows_ties(model) ? 3 : 2;
  std::uniform_int_distribution<int> face(0, faces - 1);
  int added = 0;
  while (added < games) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    int f = face(rng);
    Outcome outcome = f == 0   ? Outcome::FirstWins
                      : f == 1 ? Outcome::SecondWins
                               : Outcome::Tie;
    list.push_back({i, j, outcome});
    ++added;
  }
  return Dataset(team_labels(teams), std::move(list), model, false);
}

ItemGraph random_graph(int size, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(density);
  ItemGraph g(size);
  for (int k = 0; k < size; ++k) {
    g.add_edge(k, k, 1, 1);
    for (int l = 0; l < size; ++l)
      if (k != l && edge(rng)) g.add_edge(k, l, 2, 1);
  }
  return g;
}

void BM_TransitiveClosure(benchmark::State& state) {
  int size = static_cast<int>(state.range(0));
  ItemGraph g = random_graph(size, 2.0 / size, 42);
  for (auto _ : state) {
    ItemGraph closed = transitive_closure(g);
    benchmark::DoNotOptimize(closed.edge_count());
  }
  state.SetComplexityN(size);
}
BENCHMARK(BM_TransitiveClosure)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_Saturate(benchmark::State& state) {
  Model model = static_cast<Model>(state.range(1));
  int teams = static_cast<int>(state.range(0));
  Dataset ds = connected_dataset(teams, 8 * teams, model, 7u);
  for (auto _ : state) {
    SeparationResult sep = saturate(ds, model);
    benchmark::DoNotOptimize(sep.outer_iterations);
  }
}
BENCHMARK(BM_Saturate)
    ->Args({32, static_cast<int>(Model::Basic)})
    ->Args({32, static_cast<int>(Model::SingleOrder)})
    ->Args({32, static_cast<int>(Model::TeamTie)})
    ->Args({128, static_cast<int>(Model::Basic)})
    ->Args({128, static_cast<int>(Model::TeamTie)});

void BM_Fit(benchmark::State& state) {
  Model model = static_cast<Model>(state.range(1));
  int teams = static_cast<int>(state.range(0));
  Dataset ds = connected_dataset(teams, 12 * teams, model, 11u);
  auto sep = std::make_shared<const SeparationResult>(saturate(ds, model));
  for (auto _ : state) {
    FitResult fr = fit(ds, model, sep);
    benchmark::DoNotOptimize(fr.iterations);
  }
}
BENCHMARK(BM_Fit)
    ->Args({16, static_cast<int>(Model::Basic)})
    ->Args({16, static_cast<int>(Model::SingleTie)})
    ->Args({16, static_cast<int>(Model::TeamTie)})
    ->Args({64, static_cast<int>(Model::Basic)});

void BM_RankPipeline(benchmark::State& state) {
  int teams = static_cast<int>(state.range(0));
  Dataset ds = connected_dataset(teams, 10 * teams, Model::SingleTie, 23u);
  for (auto _ : state) {
    FitResult fr = fit(ds, Model::SingleTie);
    RoundRobinSummary summary =
        summarize(probability_matrix(fr), ds.teams(), PointSystem{3, 0, 1});
    benchmark::DoNotOptimize(rank(summary).front());
  }
}
BENCHMARK(BM_RankPipeline)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
