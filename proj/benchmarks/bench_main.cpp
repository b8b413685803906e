#include <benchmark/benchmark.h>

#include "hnf/engine.hpp"
#include "hnf/hopf.hpp"
#include "hnf/lie.hpp"
#include "hnf/oracle.hpp"

namespace {

const char* kHopf1 =
    "params = a\n"
    "equation x = y + a*x + x^2*y - 3/2*x*y^2 + 2*x^2 + a*y^2\n"
    "equation y = -x + a*y - x^3 + y^3 + x*y\n";

const char* kHopf2 =
    "params = a b\n"
    "equation x = y + a*x + b*x^3 + x^5 + x*y^4\n"
    "equation y = -x + b*y + a*x^2*y + y^5\n";

hnf::ParamVectorField random_field(std::size_t m, int grade, const hnf::Grading& g, unsigned seed) {
  hnf::ParamVectorField v(m, g, 16);
  long c = seed;
  for (const auto& t : hnf::state_basis_of_grade(m, grade, g)) {
    c = (c * 1103515245 + 12345) % 2147483648;
    if (c % 3) v.add(t, hnf::make_rational(c % 11 - 5, 1 + c % 4));
  }
  return v;
}

void BM_Bracket(benchmark::State& state) {
  const hnf::Grading g{1};
  const auto u = random_field(2, static_cast<int>(state.range(0)), g, 1);
  const auto v = random_field(2, static_cast<int>(state.range(0)), g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hnf::lie_bracket(u, v, 16));
}
BENCHMARK(BM_Bracket)->Arg(2)->Arg(4)->Arg(6);

void BM_OracleBracket(benchmark::State& state) {
  const hnf::Grading g{1};
  const auto u = random_field(2, static_cast<int>(state.range(0)), g, 1);
  const auto v = random_field(2, static_cast<int>(state.range(0)), g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hnf::oracle_bracket(u, v, 16));
}
BENCHMARK(BM_OracleBracket)->Arg(2)->Arg(4)->Arg(6);

void BM_Normalize(benchmark::State& state, const char* text, hnf::Style style) {
  const auto v = hnf::realify(hnf::parse_system(text), hnf::Grading{1});
  hnf::NormalizationConfig cfg;
  cfg.style = style;
  for (auto _ : state) benchmark::DoNotOptimize(hnf::normalize(v, cfg));
}
BENCHMARK_CAPTURE(BM_Normalize, n0_1_spectral, kHopf1, hnf::Style::Spectral)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Normalize, n0_1_distorted, kHopf1, hnf::Style::Distorted)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Normalize, n0_2_distorted, kHopf2, hnf::Style::Distorted)->Unit(benchmark::kMillisecond);

void BM_Replay(benchmark::State& state) {
  const auto v = hnf::realify(hnf::parse_system(kHopf1), hnf::Grading{1});
  hnf::NormalizationConfig cfg;
  cfg.style = hnf::Style::Distorted;
  const auto r = hnf::normalize(v, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(hnf::replay_log(r.input, r.log, r.config.degree));
}
BENCHMARK(BM_Replay)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
