#include <benchmark/benchmark.h>

#include "absgame/harness.hpp"

using namespace absgame;

namespace {

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

void BM_RationalArithmetic(benchmark::State& state) {
  Rational x = q(355, 113);
  const Rational y = q(103993, 33102);
  for (auto _ : state) {
    Rational z = x * y + x / y - y;
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_RationalArithmetic);

void BM_GaussIterate(benchmark::State& state) {
  const long depth = state.range(0);
  const SystemSpec sys = SystemSpec::gauss();
  for (auto _ : state) {
    Rational x = q(1000003, 1618033);
    for (long i = 0; i < depth && !x.is_zero(); ++i) x = apply_map(sys, x);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_GaussIterate)->Arg(8)->Arg(32);

void BM_BranchPreimages(benchmark::State& state) {
  const SystemSpec sys = SystemSpec::beta(3);
  const long m = state.range(0);
  for (auto _ : state) {
    auto pts = branch_preimages(sys, m, q(1, 7), unit_interval());
    benchmark::DoNotOptimize(pts);
  }
}
BENCHMARK(BM_BranchPreimages)->Arg(4)->Arg(8);

void BM_CylinderOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cylinder_oracle(state.range(0), 4));
}
BENCHMARK(BM_CylinderOracle)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ValidateBobMove(benchmark::State& state) {
  GameConfig cfg;
  cfg.beta = q(3, 10);
  GameState gs(cfg);
  gs.play_bob(Ball(q(1, 2), q(1, 10)));
  gs.play_alice(Ball(q(1, 2), q(3, 100)));
  const Ball cand(q(43, 100), q(3, 100));
  for (auto _ : state) benchmark::DoNotOptimize(gs.validate_bob_move(cand));
}
BENCHMARK(BM_ValidateBobMove);

void BM_Game(benchmark::State& state, const char* system, const char* bob) {
  RunConfig c;
  c.system = SystemSpec::parse(system);
  c.beta = q(1, 5);
  c.rounds = state.range(0);
  c.bob = bob;
  c.twist = "identity";
  for (auto _ : state) {
    const RunResult r = run_game(c);
    benchmark::DoNotOptimize(r.rounds_played);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_Game, beta2_random, "beta:2", "random:1")->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Game, gauss_random, "gauss", "random:1")->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Game, gauss_chaser, "gauss", "chaser")->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  RunConfig c;
  c.rounds = state.range(0);
  const std::string text = run_game(c).text();
  for (auto _ : state) benchmark::DoNotOptimize(verify_transcript_text(text).ok());
}
BENCHMARK(BM_Verify)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
