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

#ifndef ONESHOT_SMOOTH_ENTROPY_HPP_
#define ONESHOT_SMOOTH_ENTROPY_HPP_

#include <string>
#include <variant>
#include <vector>

#include "oneshot/prob.hpp"

namespace oneshot {

// Retained sub-distributions, one per side-information value. For the
// unconditional quantities the family has a single entry with an empty
// y label.
struct ConditionalWitness {
  std::vector<std::string> y_labels;
  std::vector<SubProbVector> per_y;  // conditional masses, entrywise <= P(x|y)
};

// Result of a smoothing optimization: the value in bits, the total mass the
// optimal event discards, and the retained sub-distribution realizing it.
struct SmoothingReport {
  double value_bits = 0.0;
  double removed_mass = 0.0;
  std::variant<SubProbVector, ConditionalWitness> witness;
};

// Non-smooth quantities. h_min is the negative log of the largest atom,
// h_max the log of the support size; conditioning takes the worst
// side-information value (columns with zero probability are skipped).
double h_min(const ProbVector& p);
double h_max(const ProbVector& p);
double h_min_cond(const JointDistribution& j);
double h_max_cond(const JointDistribution& j);

// Smoothed variants. All four optimize over retained sub-distributions that
// keep mass at least 1 - eps (a single global event in the conditional
// case). The min flavor caps atoms at a water-filling level; the max flavor
// deletes the smallest atoms (per column, for the conditional version).
// Both solves are exact.
SmoothingReport smooth_h_min(const ProbVector& p, Epsilon eps);
SmoothingReport smooth_h_max(const ProbVector& p, Epsilon eps);
SmoothingReport smooth_h_min_cond(const JointDistribution& j, Epsilon eps);
SmoothingReport smooth_h_max_cond(const JointDistribution& j, Epsilon eps);

// Re-evaluates the non-smooth entropy on a report's witness; used to check
// that reported values are realized by their own witnesses.
double reevaluate_witness_min(const SmoothingReport& r);
double reevaluate_witness_max(const SmoothingReport& r);

}  // namespace oneshot

#endif  // ONESHOT_SMOOTH_ENTROPY_HPP_
