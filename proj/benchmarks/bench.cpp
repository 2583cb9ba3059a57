#include <benchmark/benchmark.h>

#include "valmat/family.hpp"
#include "valmat/gen.hpp"
#include "valmat/induction.hpp"
#include "valmat/intersection.hpp"

using namespace valmat;

static void BM_SolverVsInstanceSize(benchmark::State& state) {
  Rng rng(1);
  int n = static_cast<int>(state.range(0));
  WeightedBipGraph g = gen_graph(rng, n, n, 70);
  Matroid m = gen_matroid(rng, n, n);
  ElemSet cover;
  for (int i = 0; i < n / 2; ++i) cover.insert(i);
  for (auto _ : state) {
    auto r = max_weight_independent_matching(g, m, cover);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_SolverVsInstanceSize)->DenseRange(4, 12, 2);

static void BM_DualCertificate(benchmark::State& state) {
  Rng rng(2);
  int n = static_cast<int>(state.range(0));
  WeightedBipGraph g = gen_graph_split(rng, n, 1, n, 80);
  Matroid m = Matroid::uniform(n, std::min(3, n));
  for (auto _ : state) {
    try {
      DualCert cert = dual_certificate(g, m);
      benchmark::DoNotOptimize(cert.tau.size());
    } catch (const no_certificate_error&) {
    }
  }
}
BENCHMARK(BM_DualCertificate)->DenseRange(3, 6, 1);

static void BM_FamilyCheck(benchmark::State& state) {
  Rng rng(3);
  int n = static_cast<int>(state.range(0));
  FamilyParams p = random_family_params(rng, n, false);
  ValMat h = make_Fn(p);
  for (auto _ : state) {
    auto c = check_valuated(h);
    benchmark::DoNotOptimize(c.ok);
  }
}
BENCHMARK(BM_FamilyCheck)->DenseRange(3, 5, 1);

static void BM_RMinorTable(benchmark::State& state) {
  Rng rng(4);
  RMinorRep rep = gen_rminor_rep(rng, 6, 1, 5);
  for (auto _ : state) {
    ValMat f = rminor_table(rep);
    benchmark::DoNotOptimize(f.entries().size());
  }
}
BENCHMARK(BM_RMinorTable);

BENCHMARK_MAIN();
