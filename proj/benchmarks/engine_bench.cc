#include <benchmark/benchmark.h>

#include "streamfix/answer.h"
#include "streamfix/entailment.h"
#include "streamfix/operators.h"
#include "streamfix/parser.h"

namespace streamfix {
namespace {

constexpr const char* kRunning =
    "@2 a :- not @7 c.\n"
    "[inf,0] box a :- not c.\n"
    "[1,inf] box c :- not @2 a.\n"
    "[2,3] box (a & b) :- [0,1] diamond c, box d.\n";

const Stream kData{{1, {"a"}}, {5, {"a", "b"}}, {10, {"c"}}};

Stream RunningModel() {
  Stream s = kData;
  for (TimePoint t = 3; t <= 8; ++t) {
    s.Insert(t, "a");
    s.Insert(t, "b");
  }
  for (TimePoint t = 4; t <= 10; ++t) s.Insert(t, "c");
  return s;
}

// Stream with `n` time points alternating a and {a,b}.
Stream LongStream(TimePoint n) {
  Stream s;
  for (TimePoint t = 1; t <= n; ++t) {
    s.Insert(t, "a");
    if (t % 2 == 0) s.Insert(t, "b");
  }
  return s;
}

void BM_Entails(benchmark::State& state) {
  const Stream s = LongStream(static_cast<TimePoint>(state.range(0)));
  const Formula f = ParseFormula("[2,inf] box (a -> diamond b) & !@3 c");
  for (auto _ : state) {
    benchmark::DoNotOptimize(Entails(s, 5, f, {}));
  }
}
BENCHMARK(BM_Entails)->Range(8, 512);

void BM_ModelOp(benchmark::State& state) {
  const Stream s = LongStream(static_cast<TimePoint>(state.range(0)));
  const Formula f = ParseFormula("[1,inf] box c & [2,3] box (a & b)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(ModelOp(s, 5, f, {}));
  }
}
BENCHMARK(BM_ModelOp)->Range(8, 512);

void BM_PhiDaggerRunning(benchmark::State& state) {
  const Program p = ParseProgram(kRunning);
  const Stream model = RunningModel();
  for (auto _ : state) {
    benchmark::DoNotOptimize(PhiDagger(p, kData, {"d"}, 5, model));
  }
}
BENCHMARK(BM_PhiDaggerRunning);

void BM_EnumerateRunning(benchmark::State& state) {
  const Program p = ParseProgram(kRunning);
  const Universe u = DefaultUniverse(p, kData, 5, {"d"});
  const AnswerQuery q{state.range(0) == 0 ? AnswerMode::kFlp
                                          : AnswerMode::kFixpoint,
                      {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateAnswerStreams(p, 5, kData, {"d"}, u, q));
  }
}
BENCHMARK(BM_EnumerateRunning)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Entails3Undecided(benchmark::State& state) {
  const Stream upper = LongStream(static_cast<TimePoint>(state.range(0)));
  const ThreeValuedStream p(Stream(), upper);
  const Formula f = ParseFormula("box a -> diamond b");
  for (auto _ : state) {
    benchmark::DoNotOptimize(Entails3(p, 1, f, {}, 24));
  }
}
BENCHMARK(BM_Entails3Undecided)->DenseRange(4, 12, 4);

}  // namespace
}  // namespace streamfix

BENCHMARK_MAIN();
