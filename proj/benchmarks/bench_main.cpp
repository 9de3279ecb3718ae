#include <benchmark/benchmark.h>

#include "lieweyl/opparse.hpp"
#include "lieweyl/weyl.hpp"
#include "lieweyl/wigner.hpp"

using namespace lieweyl;

namespace {

void BM_WignerStack(benchmark::State& state) {
  const int twoLmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto stack = wigner_little_d_stack(twoLmax, 0.7);
    benchmark::DoNotOptimize(stack);
  }
}
BENCHMARK(BM_WignerStack)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ForwardFT_SU2(benchmark::State& state) {
  const GroupId g = GroupId::su2();
  const double lambda = static_cast<double>(state.range(0));
  auto rule = haar_quadrature(g, static_cast<int>(2 * lambda) + 2);
  GridFunction f;
  f.group = g;
  f.rule = rule;
  f.values.assign(rule->size(), Complex{1.0, 0.5});
  for (auto _ : state) {
    auto coeffs = forward_ft(f, lambda);
    benchmark::DoNotOptimize(coeffs);
  }
  state.SetLabel(std::to_string(rule->size()) + " nodes");
}
BENCHMARK(BM_ForwardFT_SU2)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CoreIdentity_SU2(benchmark::State& state) {
  const GroupId g = GroupId::su2();
  const auto spec = parse_operator("prod(mult(cos(x3)), spec(t^2/(1+t^2)))");
  const IrrepLabel xi = IrrepLabel::su2(state.range(0));
  auto rule = haar_quadrature(
      g, static_cast<int>(std::ceil(2.0 * xi.modulus(g))) + 4);
  for (auto _ : state) {
    auto res = verify_core_identity(*spec, g, xi, rule);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_CoreIdentity_SU2)->Arg(3)->Arg(6)->Arg(9)
    ->Unit(benchmark::kMillisecond);

void BM_WeylScan_T2(benchmark::State& state) {
  const GroupId g = GroupId::torus(2);
  const auto spec = parse_operator("prod(mult(cos(x1)), spec(t^2/(1+t^2)))");
  auto rule = haar_quadrature(g, 4);
  std::vector<double> grid;
  const double lmax = static_cast<double>(state.range(0));
  for (int i = 1; i <= 20; ++i) grid.push_back(lmax * i / 20.0);
  for (auto _ : state) {
    auto rows = weyl_scan(*spec, g, grid, rule, ReferenceLimit{}, 1);
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_WeylScan_T2)->Arg(25)->Arg(50)->Arg(100)
    ->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
