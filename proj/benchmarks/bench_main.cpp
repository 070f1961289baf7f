#include <benchmark/benchmark.h>

#include "mixlab/largeness.hpp"
#include "mixlab/ramsey.hpp"
#include "mixlab/systems.hpp"

using namespace mixlab;

namespace {

GroupElement xy(const BigInt& x, const BigInt& y) { return GroupElement(std::vector<BigInt>{x, y}); }

void BM_LedrappierTriple(benchmark::State& state) {
  const auto led = SystemHandle::ledrappier();
  const auto a = make_pattern(led, {{xy(0, 0), 0}});
  const BigInt p = pow(BigInt(2), static_cast<unsigned long>(state.range(0)));
  const std::vector<CorrelationTerm> t = {{xy(0, 0), a}, {xy(p, 0), a}, {xy(0, p), a}};
  for (auto _ : state) benchmark::DoNotOptimize(correlate(led, t));
}
BENCHMARK(BM_LedrappierTriple)->Arg(1)->Arg(10)->Arg(40);

void BM_LedrappierBlock(benchmark::State& state) {
  const auto led = SystemHandle::ledrappier();
  std::vector<std::pair<GroupElement, int>> items;
  for (long x = 0; x < state.range(0); ++x) {
    for (long y = 0; y < state.range(0); ++y) items.emplace_back(xy(x * 3, y * 5), int((x + y) % 2));
  }
  const auto a = make_pattern(led, items);
  for (auto _ : state) benchmark::DoNotOptimize(cylinder_measure(led, a));
}
BENCHMARK(BM_LedrappierBlock)->Arg(2)->Arg(4)->Arg(6);

void BM_FindHomogeneous(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Coloring col{2, n, 2, {}, {}};
  for (const auto& alpha : all_subsets(n, 2)) col.color.push_back(((alpha[0] * 7 + alpha[1] * 13) % 5) < 2);
  for (auto _ : state) benchmark::DoNotOptimize(find_homogeneous(col, n));
}
BENCHMARK(BM_FindHomogeneous)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateFs(benchmark::State& state) {
  const auto fam = FSFamily::generate(GroupCtx::integers(), 1, static_cast<std::size_t>(state.range(0)),
                                      [](std::size_t, std::size_t k) {
                                        return GroupElement(std::vector<BigInt>{pow(BigInt(3), k)});
                                      });
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fs(fam));
}
BENCHMARK(BM_EnumerateFs)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
