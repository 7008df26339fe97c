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

#include "oneshot/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace oneshot {

double cap_level(const std::vector<double>& values, const std::vector<double>& weights,
                 double budget) {
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

  // Between consecutive breakpoints the removed mass is A - B*c where A, B
  // accumulate the atoms strictly above c.
  double a = 0.0, b = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    a += weights[order[k]] * values[order[k]];
    b += weights[order[k]];
    double next = (k + 1 < n) ? values[order[k + 1]] : 0.0;
    double removed_at_next = a - b * next;
    if (removed_at_next >= budget) {
      double c = (a - budget) / b;
      return c > 0.0 ? c : 0.0;
    }
  }
  return 0.0;  // the whole mass fits in the budget
}

std::size_t sample_index(const std::vector<double>& cumulative, std::mt19937_64& rng) {
  double u = uniform_double(rng) * cumulative.back();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  std::size_t i = static_cast<std::size_t>(it - cumulative.begin());
  return std::min(i, cumulative.size() - 1);
}

unsigned max_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ONESHOT_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned workers = max_threads();
  if (workers <= 1 || n < 2 * workers) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace oneshot
