#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "qdl/afe_kernel.hpp"
#include "qdl/arith.hpp"
#include "qdl/gauss.hpp"
#include "qdl/lfunc.hpp"
#include "qdl/moment.hpp"
#include "qdl/numkit.hpp"

namespace {

using qdl::Complex;

void BM_Kronecker(benchmark::State& state) {
  std::int64_t a = 1234567;
  for (auto _ : state) {
    int acc = 0;
    for (std::int64_t b = 1; b < 1000; ++b) acc += qdl::arith::kronecker(a, b);
    benchmark::DoNotOptimize(acc);
    ++a;
  }
  state.SetItemsProcessed(state.iterations() * 999);
}
BENCHMARK(BM_Kronecker);

void BM_GSum(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  std::int64_t q = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdl::gauss::g_sum(n, q));
    q = q % 200 + 1;
  }
}
BENCHMARK(BM_GSum)->Arg(105)->Arg(3 * 3 * 5 * 7 * 11)->Arg(999999);

void BM_HurwitzZeta(benchmark::State& state) {
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qdl::numkit::hurwitz_zeta(Complex(0.5, 3.0), x));
    x = x < 0.99 ? x + 0.01 : 0.01;
  }
}
BENCHMARK(BM_HurwitzZeta);

void BM_AfeEvaluator(benchmark::State& state) {
  const qdl::lfunc::AfeEvaluator evaluator(Complex(0.6, 0.0));
  std::vector<std::int64_t> discs;
  for (std::int64_t d = state.range(0); discs.size() < 64; ++d) {
    if (qdl::arith::is_fundamental_discriminant(d)) discs.push_back(d);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluator.evaluate(discs[i++ % discs.size()]));
  }
}
BENCHMARK(BM_AfeEvaluator)->Arg(1000)->Arg(100000);

void BM_LPrimitiveHurwitz(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qdl::lfunc::l_primitive_hurwitz(-1003, 0.5));
}
BENCHMARK(BM_LPrimitiveHurwitz);

void BM_ComputeMoment(benchmark::State& state) {
  const qdl::moment::MomentParams params{static_cast<double>(state.range(0)), Complex(0.1, 0.0),
                                         qdl::moment::WeightSpec::gaussian()};
  for (auto _ : state) benchmark::DoNotOptimize(qdl::moment::compute_moment(params, 1));
}
BENCHMARK(BM_ComputeMoment)->Arg(1024)->Arg(8192)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
