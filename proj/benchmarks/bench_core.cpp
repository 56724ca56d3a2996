#include <benchmark/benchmark.h>

#include <random>

#include "intens/canonical.hpp"
#include "intens/encode.hpp"
#include "intens/generator.hpp"
#include "intens/match.hpp"
#include "intens/parse.hpp"
#include "intens/pretty.hpp"
#include "intens/reduce.hpp"

namespace {

using namespace intens;

Term deep_term(int depth) {
  Term t = Term::leaf(Name("a"));
  for (int i = 0; i < depth; ++i) t = Term::compound(t, Term::leaf(Name("b")));
  return t;
}

Pattern deep_pattern(int depth) {
  Pattern p = Pattern::binding(Name("x0"));
  for (int i = 0; i < depth; ++i) {
    p = Pattern::compound(p, Pattern::name_match(Term::leaf(Name("b"))));
  }
  return p;
}

void BM_MatchDeep(benchmark::State& state) {
  const Term t = deep_term(static_cast<int>(state.range(0)));
  const Pattern p = deep_pattern(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(match_one(t, p));
  }
}
BENCHMARK(BM_MatchDeep)->Arg(8)->Arg(32)->Arg(128);

void BM_Canonicalize(benchmark::State& state) {
  const Language amdi = *language_from_code("AMDI");
  std::mt19937_64 rng(7);
  GenOptions opts;
  opts.max_depth = static_cast<int>(state.range(0));
  const Process p = random_process(amdi, rng, opts);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(p));
  }
}
BENCHMARK(BM_Canonicalize)->Arg(3)->Arg(5)->Arg(7);

void BM_Explore(benchmark::State& state) {
  const Language amdi = *language_from_code("AMDI");
  const Process p = parse_process(
      "<a*b> | <a*c> | (x*y).<y*x> | (x*y).(ok | <y>) | (z).0", amdi);
  for (auto _ : state) {
    benchmark::DoNotOptimize(explore(p, amdi, Limits{16, 4096}));
  }
}
BENCHMARK(BM_Explore);

void BM_EncodePipeline(benchmark::State& state) {
  const Language from = *language_from_code("SPCN");
  const Language to = *language_from_code("AMDI");
  const Process p = parse_process("'c<a,b>.ok | c(x,=b).'d<x>.0 | 'd<a>.0", from);
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode_to(p, from, to));
  }
}
BENCHMARK(BM_EncodePipeline);

}  // namespace

BENCHMARK_MAIN();
