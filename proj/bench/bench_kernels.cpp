#include <benchmark/benchmark.h>

#include "virmod/invariants.hpp"
#include "virmod/kernels.hpp"
#include "virmod/modular_data.hpp"

using namespace virmod;

namespace {

struct Fixture {
  MinimalModel model;
  SMatrixHat s;
  std::vector<long> twist;
  std::vector<long> invariant;
  long conductor;

  Fixture(int p, int q, CatalogRow row)
      : model(p, q), s(model), conductor(4L * p * q) {
    for (const auto& l : model.transversal()) {
      const long u = static_cast<long>(l.r) * p - static_cast<long>(l.s) * q;
      twist.push_back(u * u);
    }
    invariant = build_catalog(model, row).entries();
  }
};

const Fixture& fixture(int which) {
  static const Fixture small(7, 6, CatalogRow::D_q_odd);
  static const Fixture medium(12, 11, CatalogRow::E6_q12);
  static const Fixture large(13, 12, CatalogRow::E6_p12);
  return which == 0 ? small : which == 1 ? medium : large;
}

void set_label(benchmark::State& state, const Fixture& f) {
  state.SetLabel("(" + std::to_string(f.model.p()) + "," + std::to_string(f.model.q()) + ") d=" +
                 std::to_string(f.model.size()));
}

void BM_STwistS_Parallel(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::s_twist_s(f.s, f.twist, f.conductor));
  set_label(state, f);
}

void BM_STwistS_Reference(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reference::s_twist_s(f.s, f.twist, f.conductor));
  set_label(state, f);
}

void BM_Commutator_Parallel(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::commutator_exact(f.s, f.invariant));
  set_label(state, f);
}

void BM_Commutator_Reference(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reference::commutator_exact(f.s, f.invariant));
  set_label(state, f);
}

void BM_Commutator_Ball(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::commutator_ball(f.s, f.invariant, 256, 1e-40));
  set_label(state, f);
}

}  // namespace

BENCHMARK(BM_STwistS_Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_STwistS_Reference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Commutator_Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Commutator_Reference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Commutator_Ball)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
