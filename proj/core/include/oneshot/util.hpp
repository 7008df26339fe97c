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

#ifndef ONESHOT_UTIL_HPP_
#define ONESHOT_UTIL_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oneshot {

// Smallest cap c >= 0 such that sum_i w_i * max(v_i - c, 0) <= budget.
// Solved exactly on the piecewise-linear breakpoint lattice of v.
// With unit weights this is the water-filling level used for smoothed
// min-entropies; with block masses it is the flattening level used when
// pushing a mass vector toward uniform.
double cap_level(const std::vector<double>& values, const std::vector<double>& weights,
                 double budget);

// Deterministic uniform double in [0, 1) with 53 random bits. Avoids
// std::uniform_real_distribution so streams are identical across standard
// library implementations.
inline double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Index sampled from an explicit cumulative mass table.
std::size_t sample_index(const std::vector<double>& cumulative, std::mt19937_64& rng);

// Number of worker threads honored by parallel_for: hardware concurrency
// capped by the ONESHOT_THREADS environment variable when set.
unsigned max_threads();

// Runs fn(i) for i in [0, n). Results must be written to per-index slots by
// the caller; chunks are joined before returning, so the observable outcome
// is identical to the sequential loop regardless of thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace oneshot

#endif  // ONESHOT_UTIL_HPP_
