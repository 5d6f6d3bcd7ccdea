#include <benchmark/benchmark.h>

#include <random>

#include "syzstab/gallery.hpp"
#include "syzstab/koszul.hpp"
#include "syzstab/linalg.hpp"
#include "syzstab/stability.hpp"

using namespace syzstab;

namespace {

SparseMat random_sparse(std::size_t rows, std::size_t cols, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> val(-3, 3);
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng)) t.push_back({i, j, Rat(val(rng))});
  return SparseMat::from_triplets(rows, cols, std::move(t));
}

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void BM_Rank(benchmark::State& st) {
  const auto m = random_sparse(400, 500, 0.01, 1);
  for (auto _ : st) benchmark::DoNotOptimize(rank(m, exec_of(st)));
  label(st);
}

void BM_Kernel(benchmark::State& st) {
  const auto m = random_sparse(200, 300, 0.02, 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernel_basis(m, exec_of(st)).nrows());
  label(st);
}

void BM_KoszulMatrix(benchmark::State& st) {
  const auto u = free_slice(8, 2);
  for (auto _ : st) benchmark::DoNotOptimize(koszul_matrix(3, u, exec_of(st)).nnz());
  label(st);
}

void BM_BettiCarpet3(benchmark::State& st) {
  for (auto _ : st) {
    Scheme x("carpet-3", carpet(3));
    benchmark::DoNotOptimize(betti_table(x, 4, 2, exec_of(st)).cells.size());
  }
  label(st);
}

void BM_BettiSection(benchmark::State& st) {
  for (auto _ : st) {
    Scheme x("section", quadric_section(Scheme("sigma0", del_pezzo_singular()), generic_quadric()));
    benchmark::DoNotOptimize(betti_table(x, 4, 3, exec_of(st)).cells.size());
  }
  label(st);
}

void BM_ProbeFamily(benchmark::State& st) {
  std::vector<OneParamSubgroup> fam;
  for (int a = 1; a <= 24; ++a) fam.emplace_back(std::vector<std::int64_t>{-2 * a, 1, -1, a - 1, a, 1});
  for (auto _ : st) {
    Scheme c0("C0", c_zero());
    benchmark::DoNotOptimize(probe_1ps_family(c0, fam, Rat(4), exec_of(st)).size());
  }
  label(st);
}

}  // namespace

BENCHMARK(BM_Rank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Kernel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_KoszulMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BettiCarpet3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BettiSection)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ProbeFamily)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
