#include <benchmark/benchmark.h>

#include "reflex/abstraction.hpp"
#include "reflex/kernels.hpp"
#include "reflex/random_terms.hpp"
#include "reflex/suites.hpp"

using namespace reflex;

namespace {

std::vector<std::pair<CLTerm, CLTerm>> beta_pairs(std::size_t n) {
  TermRng rng(7);
  const auto atoms = default_atoms();
  std::vector<std::pair<CLTerm, CLTerm>> out;
  for (std::size_t k = 0; k < n; ++k) {
    CLTerm t = random_term(rng, atoms, {});
    CLTerm u = random_term(rng, atoms, {});
    const AbsMode mode = k % 2 ? AbsMode::Dag : AbsMode::Star;
    out.emplace_back(CLTerm::app(lam_abstract(mode, 1, t), u), subst(t, 1, u));
  }
  return out;
}

void BM_ClEqBatch(benchmark::State& state) {
  const auto pairs = beta_pairs(static_cast<std::size_t>(state.range(0)));
  const Exec exec = state.range(1) ? Exec::Parallel : Exec::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(cl_eq_batch(pairs, {}, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClEqBatch)->ArgNames({"pairs", "parallel"})->ArgsProduct({{64, 512}, {0, 1}});

void BM_LambdaBetaBeta(benchmark::State& state) {
  const ModelPtr model = lambda_beta_model();
  const auto eqs = beta_equations(*model, 3, static_cast<std::size_t>(state.range(0)));
  const Exec exec = state.range(1) ? Exec::Parallel : Exec::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_equations(*model, eqs, {}, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(eqs.size()));
}
BENCHMARK(BM_LambdaBetaBeta)->ArgNames({"per_mode", "parallel"})->ArgsProduct({{32, 256}, {0, 1}});

void BM_StrongReflexivity(benchmark::State& state) {
  const ModelPtr model = state.range(0) ? lambda_beta_model() : free_cl_model(2);
  const auto eqs = suite_equations("strong-reflexivity7");
  const Exec exec = state.range(1) ? Exec::Parallel : Exec::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_equations(*model, eqs, {}, exec));
}
BENCHMARK(BM_StrongReflexivity)->ArgNames({"lambda_beta", "parallel"})->ArgsProduct({{0, 1}, {0, 1}});

}  // namespace

BENCHMARK_MAIN();
