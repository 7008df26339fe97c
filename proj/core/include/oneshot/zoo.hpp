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

#ifndef ONESHOT_ZOO_HPP_
#define ONESHOT_ZOO_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oneshot/prob.hpp"

namespace oneshot::zoo {

// The erasure output symbol. Serialized as the string "erasure".
inline constexpr const char* kErasureLabel = "⊥";

Channel identity(std::size_t n);
Channel bsc(double p);
// Binary erasure channel: outputs {0, erasure, 1}.
Channel bec(double p);
// Z-channel: input 0 is noiseless, input 1 flips to 0 with probability p.
Channel zchannel(double p);
// Rows drawn independently and uniformly from the simplex; bit-for-bit
// reproducible for a given seed.
Channel random_channel(std::size_t nx, std::size_t ny, std::uint64_t seed);

ProbVector uniform(std::size_t n, const std::string& prefix = "x");

// Diagonal joint with X = Y uniform over n symbols.
JointDistribution equal(std::size_t n);
JointDistribution product(const ProbVector& p, const ProbVector& q);
// Disjoint full-support rectangles; block b has total mass masses[b] spread
// uniformly over an nx[b] x ny[b] rectangle.
JointDistribution blocks(const std::vector<double>& masses,
                         const std::vector<std::pair<std::size_t, std::size_t>>& sizes);
JointDistribution random_joint(std::size_t nx, std::size_t ny, std::size_t support,
                               std::uint64_t seed);

// Fixed corpus of small named joints used by the verification suites.
// Every entry has at most 4 symbols per side and at most 12 support atoms.
std::vector<std::pair<std::string, JointDistribution>> tiny_joint_corpus();

// Fixed corpus of small named channels used by the capacity suites.
std::vector<std::pair<std::string, Channel>> tiny_channel_corpus();

}  // namespace oneshot::zoo

#endif  // ONESHOT_ZOO_HPP_
