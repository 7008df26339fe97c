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

#ifndef ONESHOT_PROB_HPP_
#define ONESHOT_PROB_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "oneshot/errors.hpp"

namespace oneshot {

inline constexpr const char* kVersion = "0.1.0";

// Normalization tolerance on input data. Inputs are validated against this
// and never silently renormalized afterwards.
inline constexpr double kNormTol = 1e-12;
// Atoms at or below this level are treated as exact zeros when computing
// supports, so float dust cannot inflate a support set.
inline constexpr double kZeroAtom = 1e-15;
// Slack used when comparing accumulated removed mass against a budget.
inline constexpr double kMassSlack = 1e-12;
// Tolerance at which computed bit values are asserted against references.
inline constexpr double kValueTol = 1e-9;

// A probability in [0, 1) used as a smoothing / error budget.
class Epsilon {
 public:
  Epsilon() : value_(0.0) {}
  explicit Epsilon(double v) : value_(v) {
    if (!(v >= 0.0) || !(v < 1.0)) {
      throw_error(ErrorKind::kInvalidParameter,
                  "epsilon must lie in [0, 1), got " + std::to_string(v));
    }
  }
  double value() const { return value_; }

 private:
  double value_;
};

// Finite probability distribution over a labeled alphabet.
struct ProbVector {
  std::vector<std::string> labels;
  std::vector<double> mass;

  std::size_t size() const { return labels.size(); }
};

// Same shape as ProbVector but the mass may sum to anything <= 1.
struct SubProbVector {
  std::vector<std::string> labels;
  std::vector<double> mass;

  double total() const;
  std::size_t support_size() const;
  double max_atom() const;
};

// Dense row-major matrix with labeled axes; the shared layout of joints
// and channels.
struct LabeledMatrix {
  std::vector<std::string> x_labels;
  std::vector<std::string> y_labels;
  std::vector<double> values;  // row-major, x major

  std::size_t nx() const { return x_labels.size(); }
  std::size_t ny() const { return y_labels.size(); }
  double at(std::size_t x, std::size_t y) const { return values[x * ny() + y]; }
  double& at(std::size_t x, std::size_t y) { return values[x * ny() + y]; }
};

// Joint probability matrix over X x Y.
struct JointDistribution : LabeledMatrix {};

// Row-stochastic matrix: entry (x, y) is the probability of output y given
// input x.
struct Channel : LabeledMatrix {};

void validate(const ProbVector& p);
void validate(const SubProbVector& p);
void validate(const JointDistribution& j);
void validate(const Channel& w);

// Joint induced by pushing an input law through a channel; the x-marginal
// of the result is the input law.
JointDistribution joint_from_channel(const ProbVector& p_x, const Channel& w);

ProbVector marginal_x(const JointDistribution& j);
ProbVector marginal_y(const JointDistribution& j);

// Column y of the joint, renormalized by P(y). Throws
// ZeroConditioningEvent when P(y) is zero.
ProbVector conditional_x_given_y(const JointDistribution& j, const std::string& y);

// -sum p log2 p, with 0 log 0 = 0. All entropies in this library are in bits.
double shannon_entropy(const ProbVector& p);

// H(X) + H(Y) - H(XY), clamped at zero against float dust.
double mutual_information(const JointDistribution& j);

// The joint viewed as a single distribution over the product alphabet.
// Pair labels are rendered "x|y" (used for entropies of the pair).
ProbVector flatten(const JointDistribution& j);

std::size_t index_of_label(const std::vector<std::string>& labels, const std::string& label);

}  // namespace oneshot

#endif  // ONESHOT_PROB_HPP_
