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

#ifndef ONESHOT_TASKS_HPP_
#define ONESHOT_TASKS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "oneshot/prob.hpp"

namespace oneshot {

// Outcome of an operational run (extraction, compression, or common-part
// extraction), with the smoothing-based bracket evaluated at the achieved
// error. Errors are exact statistical distances or exact decoding-error
// probabilities, never estimates.
struct TaskReport {
  std::optional<int> achieved_length;   // extraction output bits
  std::optional<int> achieved_storage;  // compression bits
  double achieved_error = 0.0;          // seed average where seeds apply
  std::optional<double> worst_seed_error;
  std::optional<double> bound_lower;
  std::optional<double> bound_upper;
  std::string hash;  // family description, echoed for reproducibility
  std::uint64_t seed = 0;
  int seed_count = 0;
};

// Hashes X to ell bits with every one of the first seed_count seeds and
// reports the exact average (and worst) statistical distance between
// (hash(X), Y) and an independent uniform string next to Y. seed_count = 0
// sweeps the whole family. Throws OutputTooLong when 2^ell exceeds twice
// the input alphabet.
TaskReport extract(const JointDistribution& j, int ell, int seed_count);

// Random binning: stores the m-bit hash of X, the decoder returns the most
// probable symbol of the received bin given Y (label order on ties).
// Reports the exact decoding error for the given seed.
TaskReport compress_with_side_info(const JointDistribution& j, int m, std::uint64_t seed);

// Expected decoding error of the binning scheme averaged over every seed of
// the family; exact.
double compress_expected_error(const JointDistribution& j, int m);

// Both parties hash the block index of their side of the perturbed common
// part (the c_min_lower witness at the given budget). The reported error is
// the disagreement probability plus the distance of the output from
// uniform, both exact.
TaskReport extract_common(const JointDistribution& j, Epsilon eps_budget, int ell,
                          std::uint64_t seed);

}  // namespace oneshot

#endif  // ONESHOT_TASKS_HPP_
