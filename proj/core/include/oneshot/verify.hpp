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

#ifndef ONESHOT_VERIFY_HPP_
#define ONESHOT_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "oneshot/prob.hpp"

namespace oneshot::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;  // informational probe findings
  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

// Inequality suite for the four chain-rule brackets between the pair,
// marginal, and conditional smoothed entropies, over seeded random joints
// and admissible budget tuples.
CheckResult chain_rule_suite(std::size_t joints, std::size_t tuples_per_joint);

// Water-filling / truncation values against the enumeration oracle on
// seeded random instances with at most 12 support atoms.
CheckResult smooth_oracle_suite(std::size_t instances);

// Extractable-common-randomness bracket on the shipped tiny corpus.
CheckResult ext_sandwich_suite();

// Smoothed common-part min-entropy bracket on the shipped tiny corpus.
CheckResult cmin_sandwich_suite();

// One-shot capacity brackets (both the direct bounds and the common-part
// route) on the shipped channel corpus.
CheckResult capacity_sandwich_suite(bool include_random_channels);

// Closed-form capacity anchors: noiseless, erasure, crossover channels.
CheckResult closed_form_anchor_suite();

// Seeded random-coding runs: worst-case error within budget and the
// retained fraction after expurgation.
CheckResult coding_markov_suite(std::size_t seeds);

// Extraction and binning at the lengths prescribed by the smoothed
// entropies achieve their target errors exactly.
CheckResult operational_bounds_suite();

// Non-failing diagnostics: formulation gaps and alphabet-extension effects.
std::vector<std::string> definitional_probes();

// Full suite. tiny = reduced instance counts for quick runs.
SuiteReport run_suite(bool tiny);

// Binary entropy in bits.
double binary_entropy(double p);

}  // namespace oneshot::verify

#endif  // ONESHOT_VERIFY_HPP_
