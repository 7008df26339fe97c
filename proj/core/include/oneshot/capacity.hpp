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

#ifndef ONESHOT_CAPACITY_HPP_
#define ONESHOT_CAPACITY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oneshot/prob.hpp"

namespace oneshot {

// A single-use code: distinct input symbols indexed by message, plus a
// deterministic decoder from output symbols to message indices.
struct Code {
  std::vector<std::string> codebook;
  std::map<std::string, int> decoder;
};

struct CodeErrors {
  double max_error = 0.0;
  double avg_error = 0.0;
};

// Exact per-message decoding errors of a code over a channel.
CodeErrors evaluate_code(const Channel& w, const Code& c);

struct CapacityBounds {
  std::optional<double> lower_bits;
  std::optional<double> upper_bits;
  // Input law achieving the lower maximization, with the split used.
  std::optional<ProbVector> lower_witness;
  double eps = 0.0, eps_prime = 0.0, eps_pp = 0.0;  // lower-side budgets
  double eps1 = 0.0, eps2 = 0.0;                    // upper-side budgets
};

// Achievability bound: max over subset-uniform input laws of
// H_min^{eps'}(X) - H_max^{eps''}(X|Y), minus log2(4 eps / (eps-eps'-eps'')^2),
// clamped at zero. Requires eps > eps' + eps''.
CapacityBounds capacity_lower(const Channel& w, Epsilon eps, Epsilon eps_p, Epsilon eps_pp);

// Converse bound: max over subset-uniform input laws of
// H_min^{eps2}(X) - H_max^{eps1+eps2+2eps}(X|Y), plus log2(1/eps1).
// Requires eps1 > 0 and eps1 + eps2 + 2 eps < 1.
CapacityBounds capacity_upper(const Channel& w, Epsilon eps, Epsilon eps1, Epsilon eps2);

struct CminMaximize {
  double bits = 0.0;
  ProbVector witness_input;
};

// Max over subset-uniform input laws of the smoothed common-part
// min-entropy lower bound on the induced joint.
CminMaximize cmin_maximize(const Channel& w, Epsilon eps);

struct BuildReport {
  Code code;
  std::size_t sampled = 0;    // i.i.d. draws requested
  std::size_t distinct = 0;   // codebook size before expurgation
  std::size_t expurgated = 0; // codewords dropped for exceeding eps
  CodeErrors errors;          // exact errors of the surviving code
};

// Random-coding construction: sample codewords from the smoothed input law,
// decode to the most probable codeword consistent with the smoothed
// conditional supports, then expurgate every codeword whose exact error
// exceeds eps. Throws EmptyCode when nothing survives.
Code build_code(const Channel& w, const ProbVector& p_x, Epsilon eps1, Epsilon eps2,
                Epsilon eps3, Epsilon eps, std::uint64_t rng_seed);

// Same construction with the sampling and expurgation tallies exposed for
// the retained-fraction checks.
BuildReport build_code_report(const Channel& w, const ProbVector& p_x, Epsilon eps1,
                              Epsilon eps2, Epsilon eps3, Epsilon eps,
                              std::uint64_t rng_seed);

// Number of codewords sampled by build_code before deduplication.
std::size_t build_code_sample_count(const Channel& w, const ProbVector& p_x, Epsilon eps1,
                                    Epsilon eps2, Epsilon eps3);

// Alternating maximization of the input-output mutual information, stopped
// when the standard upper/lower bracket is within tol.
double asymptotic_capacity(const Channel& w, double tol);

}  // namespace oneshot

#endif  // ONESHOT_CAPACITY_HPP_
