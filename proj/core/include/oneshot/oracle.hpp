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

#ifndef ONESHOT_ORACLE_HPP_
#define ONESHOT_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oneshot/prob.hpp"

namespace oneshot::oracle {

// Hard limits for the exhaustive computations. Everything in this module is
// exponential by design and refuses inputs beyond the budget instead of
// silently degrading to a heuristic.
struct OracleBudget {
  std::size_t max_support_atoms = 12;
  std::size_t max_codebook = 4;
  std::size_t max_outputs = 6;
  double time_limit_seconds = 60.0;
  std::size_t max_decoder_candidates = 10'000'000;
};

enum class EntropyKind { kMin, kMax };
enum class Formulation { kEvent, kCoupling };

// Largest log2(M) such that some size-M codebook and some deterministic
// decoder achieve worst-case decoding error at most eps. Exhausts all
// codebooks and all decoder functions.
double exact_one_shot_capacity(const Channel& w, Epsilon eps, const OracleBudget& b = {});

// Smoothed min-/max-entropy by exhaustive enumeration, independent of the
// water-filling / truncation routes. The event formulation is exact. The
// coupling formulation keeps the distribution normalized; for vectors it is
// exact, for joints it is a certified one-sided bound obtained by local
// search over renormalized perturbations (lower for kMin, upper for kMax).
double exact_smooth_entropy(const ProbVector& p, Epsilon eps, EntropyKind which,
                            Formulation f, const OracleBudget& b = {});
double exact_smooth_entropy(const JointDistribution& j, Epsilon eps, EntropyKind which,
                            Formulation f, const OracleBudget& b = {});

// Exact smoothed common-part min-entropy over deletion-reachable support
// patterns: every subset of support atoms is considered deleted, and for
// each pattern the block masses are flattened toward uniform within the
// remaining variation budget (a water-filling step, solved exactly).
double exact_c_min(const JointDistribution& j, Epsilon eps, const OracleBudget& b = {});

// Exact extractable common randomness: the largest output length l such
// that some pair of deterministic maps f, g on the two marginal alphabets
// brings (f(X), g(Y)) within statistical distance eps of a shared uniform
// l-bit string. Exhausts all function pairs.
double exact_c_ext(const JointDistribution& j, Epsilon eps, const OracleBudget& b = {});

// Exact peeling of a distribution into a convex combination of
// sub-normalized components that are uniform at the level of the largest
// atom. Weights sum to one and the combination reproduces the input exactly.
std::vector<std::pair<double, SubProbVector>> uniform_decomposition(const ProbVector& p);

// Diagnostic probes for definitional gaps, reported rather than hidden:
// instances where the event and coupling formulations disagree, and
// instances where allowing one extra symbol per side changes the smoothed
// common-part min-entropy. Both return human-readable findings and assert
// nothing.
std::vector<std::string> probe_formulation_gap(const std::vector<ProbVector>& dists,
                                               const std::vector<Epsilon>& epsilons);
std::vector<std::string> probe_alphabet_extension(const JointDistribution& j, Epsilon eps,
                                                  const OracleBudget& b = {});

}  // namespace oneshot::oracle

#endif  // ONESHOT_ORACLE_HPP_
