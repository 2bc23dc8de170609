#include <benchmark/benchmark.h>

#include <random>

#include "gorwb/corpus.hpp"
#include "gorwb/oracle.hpp"

using namespace gorwb;

namespace {

void BM_Rref(benchmark::State& state, std::uint32_t p) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  Mat m = oracle::randomMat(Field(p), n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(m.rref());
}
BENCHMARK_CAPTURE(BM_Rref, f2, 2)->Arg(16)->Arg(64);
BENCHMARK_CAPTURE(BM_Rref, f7, 7)->Arg(16)->Arg(64);
BENCHMARK_CAPTURE(BM_Rref, q, 0)->Arg(8)->Arg(16);

const Corpus& corpus() {
  static const Corpus c = buildCorpus();
  return c;
}

void BM_ResolveSimple(benchmark::State& state, const char* algebra) {
  const Module& s = corpus().modulesOf(algebra).front().module;
  for (auto _ : state) benchmark::DoNotOptimize(resolve(s, Direction::Projective, 8));
}
BENCHMARK_CAPTURE(BM_ResolveSimple, a3, "a3");
BENCHMARK_CAPTURE(BM_ResolveSimple, f2_trunc3, "f2_trunc3");
BENCHMARK_CAPTURE(BM_ResolveSimple, a2_trunc2, "a2_trunc2");

void BM_Profile(benchmark::State& state, const char* algebra) {
  AlgebraPtr a = corpus().algebra(algebra);
  for (auto _ : state) benchmark::DoNotOptimize(gorensteinProfile(a));
}
BENCHMARK_CAPTURE(BM_Profile, a2_trunc2, "a2_trunc2");
BENCHMARK_CAPTURE(BM_Profile, mat2_trunc2, "mat2_trunc2");

void BM_Totalize(benchmark::State& state) {
  const Module& s = corpus().modulesOf("a2_trunc2").front().module;
  GorensteinProfile p = gorensteinProfile(corpus().algebra("a2_trunc2"));
  for (auto _ : state) benchmark::DoNotOptimize(totalizeQuasiBicomplex(s, p));
}
BENCHMARK(BM_Totalize);

void BM_FrobeniusExtension(benchmark::State& state, const char* ext) {
  const RingExtension& e = corpus().extension(ext).ext;
  for (auto _ : state) benchmark::DoNotOptimize(isFrobeniusExtension(e));
}
BENCHMARK_CAPTURE(BM_FrobeniusExtension, f7_s3, "f7_s3");
BENCHMARK_CAPTURE(BM_FrobeniusExtension, a2_trunc2, "a2_trunc2");

}  // namespace
BENCHMARK_MAIN();
