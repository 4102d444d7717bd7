// Copyright 2026 The wcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "wcore/harness.hpp"

namespace {

using namespace wcore;

std::vector<WCoreInstance> instances(std::size_t dim, std::size_t count) {
  TrialConfig cfg;
  cfg.dim = dim;
  cfg = normalized(cfg);
  std::vector<WCoreInstance> out;
  for (std::size_t t = 0; t < count; ++t) {
    Rng rng = trial_rng(1, PropertyId::THM_WCORE_12WAY, t);
    out.push_back(random_wcore_instance(cfg, rng, WMode::General));
  }
  return out;
}

void BM_Rref(benchmark::State& state) {
  const auto in = instances(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rref(in[k++ % in.size()].b));
}
BENCHMARK(BM_Rref)->DenseRange(2, 6);

void BM_MoorePenrose(benchmark::State& state) {
  const auto in = instances(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(try_moore_penrose(in[k++ % in.size()].b));
}
BENCHMARK(BM_MoorePenrose)->DenseRange(2, 6);

void BM_WCoreInverse(benchmark::State& state) {
  const auto in = instances(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& i = in[k++ % in.size()];
    benchmark::DoNotOptimize(w_core_inverse(i.a, i.w));
  }
}
BENCHMARK(BM_WCoreInverse)->DenseRange(2, 6);

void BM_WCoreViaProduct(benchmark::State& state) {
  const auto in = instances(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& i = in[k++ % in.size()];
    benchmark::DoNotOptimize(w_core_via_product(i.a, i.w));
  }
}
BENCHMARK(BM_WCoreViaProduct)->DenseRange(2, 6);

void BM_WCoreOrder(benchmark::State& state) {
  const auto in = instances(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& i = in[k++ % in.size()];
    benchmark::DoNotOptimize(order_holds(OrderKind::WCore, i.a, i.b, i.w, OrderMode::Relaxed));
  }
}
BENCHMARK(BM_WCoreOrder)->DenseRange(2, 5);

void BM_Characterizations(benchmark::State& state) {
  const auto in = instances(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& i = in[k++ % in.size()];
    benchmark::DoNotOptimize(w_core_characterizations(i.a, i.b, i.w));
  }
}
BENCHMARK(BM_Characterizations)->DenseRange(2, 4);

void BM_MinusOrder(benchmark::State& state) {
  const auto in = instances(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& i = in[k++ % in.size()];
    benchmark::DoNotOptimize(order_holds_bool(OrderKind::Minus, i.a, i.b));
  }
}
BENCHMARK(BM_MinusOrder)->DenseRange(2, 4);

void BM_BruteForceWCoreZ3(benchmark::State& state) {
  const auto ring = enumerate_ring(3, 2);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& a = ring[k % ring.size()];
    const auto& w = ring[(k * 7 + 3) % ring.size()];
    ++k;
    benchmark::DoNotOptimize(brute_force_inverse(GenInvKind::w_core(w), a));
  }
}
BENCHMARK(BM_BruteForceWCoreZ3);

void BM_Suite(benchmark::State& state) {
  TrialConfig cfg;
  cfg.trials = 20;
  const PropertyId ids[] = {PropertyId::THM_WCORE_12WAY};
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg, ids));
}
BENCHMARK(BM_Suite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
