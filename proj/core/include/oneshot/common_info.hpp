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

#ifndef ONESHOT_COMMON_INFO_HPP_
#define ONESHOT_COMMON_INFO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oneshot/prob.hpp"

namespace oneshot {

// The common random variable of a joint: connected components of the
// bipartite graph whose edges are the positive-mass atoms. Every party can
// compute the block index from its own observation alone.
struct CommonPartition {
  // blocks[b] lists the (x index, y index) atoms of component b.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> blocks;
  std::vector<double> block_mass;
  // Per-symbol block index; -1 when the symbol carries no mass.
  std::vector<int> block_of_x;
  std::vector<int> block_of_y;
  std::vector<std::string> x_labels;
  std::vector<std::string> y_labels;

  std::size_t size() const { return blocks.size(); }
};

// Lower/upper bracket of the smoothed common-part min-entropy, together
// with the perturbed joint certifying the lower bound.
struct CminResult {
  double lower_bits = 0.0;
  std::optional<double> upper_bits;
  JointDistribution perturbed_joint;
  double perturbation_mass = 0.0;  // total variation moved to reach the witness
};

CommonPartition gacs_korner(const JointDistribution& j);

double common_entropy(const CommonPartition& cp);
double common_min_entropy(const CommonPartition& cp);

// Feasible lower bound on the smoothed common-part min-entropy: greedily
// delete cheap atoms whose removal disconnects the support graph, refund the
// deleted mass inside the surviving support, then flatten block masses
// toward uniform with whatever budget remains. Every deletion prefix is
// scored and the best one wins, which also makes the bound monotone in eps.
CminResult c_min_lower(const JointDistribution& j, Epsilon eps);

// Upper bound via the smoothed support/conditional-support difference
// H_max^{eps2}(X) - H_max^{eps1+eps2+2eps}(X|Y) + log2(1/eps1).
// Requires eps1 > 0 and eps1 + eps2 + 2 eps < 1.
double c_min_upper(const JointDistribution& j, Epsilon eps, Epsilon eps1, Epsilon eps2);

struct ExtBounds {
  double lower_bits = 0.0;
  std::optional<double> upper_bits;
};

// Bracket for the extractable common randomness at error eps:
// lower = c_min_lower at eps_prime minus the 2 log2(1/(eps - eps_prime))
// extraction penalty, clamped at zero (vacuous when eps_prime == eps);
// upper = the c_min upper path minimized over a small grid of budget splits.
// Throws InvalidEpsilonBudget when eps_prime > eps.
ExtBounds c_ext_bounds(const JointDistribution& j, Epsilon eps, Epsilon eps_prime);

}  // namespace oneshot

#endif  // ONESHOT_COMMON_INFO_HPP_
