// Copyright 2026 The oneshot Authors. All rights reserved.
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

#include <random>

#include "oneshot/capacity.hpp"
#include "oneshot/common_info.hpp"
#include "oneshot/oracle.hpp"
#include "oneshot/smooth_entropy.hpp"
#include "oneshot/util.hpp"
#include "oneshot/zoo.hpp"

namespace {

using namespace oneshot;

ProbVector random_law(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ProbVector p;
  p.mass.resize(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    p.labels.push_back("x" + std::to_string(i));
    p.mass[i] = -std::log1p(-uniform_double(rng));
    total += p.mass[i];
  }
  for (double& m : p.mass) m /= total;
  return p;
}

void BM_SmoothMinEntropy(benchmark::State& state) {
  ProbVector p = random_law(static_cast<std::size_t>(state.range(0)), 99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smooth_h_min(p, Epsilon(0.1)).value_bits);
  }
}
BENCHMARK(BM_SmoothMinEntropy)->Range(64, 65536);

void BM_SmoothMaxCond(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  JointDistribution j = zoo::random_joint(n, n, n * n / 2, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smooth_h_max_cond(j, Epsilon(0.1)).value_bits);
  }
}
BENCHMARK(BM_SmoothMaxCond)->Range(4, 64);

void BM_CommonPartition(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  JointDistribution j = zoo::random_joint(n, n, 2 * n, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gacs_korner(j).size());
  }
}
BENCHMARK(BM_CommonPartition)->Range(4, 256);

void BM_CminLower(benchmark::State& state) {
  JointDistribution j = zoo::random_joint(5, 5, 14, 21);
  for (auto _ : state) {
    benchmark::DoNotOptimize(c_min_lower(j, Epsilon(0.2)).lower_bits);
  }
}
BENCHMARK(BM_CminLower);

void BM_ExactCapacityIdentity4(benchmark::State& state) {
  Channel w = zoo::identity(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::exact_one_shot_capacity(w, Epsilon(0.1)));
  }
}
BENCHMARK(BM_ExactCapacityIdentity4);

void BM_CapacityBounds3x3(benchmark::State& state) {
  Channel w = zoo::random_channel(3, 3, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        *capacity_upper(w, Epsilon(0.1), Epsilon(0.25), Epsilon(0.0)).upper_bits);
  }
}
BENCHMARK(BM_CapacityBounds3x3);

}  // namespace

BENCHMARK_MAIN();
