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

#include "oneshot/prob.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace oneshot {
namespace {

void check_unique(const std::vector<std::string>& labels, const char* axis) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw_error(ErrorKind::kDuplicateLabel,
                  std::string(axis) + " label '" + l + "' appears twice");
    }
  }
}

void check_nonnegative(const std::vector<double>& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0.0) {
      throw_error(ErrorKind::kNegativeMass,
                  std::string(what) + " entry " + std::to_string(i) + " is " +
                      std::to_string(v[i]));
    }
  }
}

void check_sum(double sum, double want, const char* what) {
  if (std::abs(sum - want) > kNormTol) {
    throw_error(ErrorKind::kNotNormalized,
                std::string(what) + " sums to " + std::to_string(sum) +
                    ", deviation " + std::to_string(sum - want));
  }
}

}  // namespace

double SubProbVector::total() const {
  return std::accumulate(mass.begin(), mass.end(), 0.0);
}

std::size_t SubProbVector::support_size() const {
  std::size_t n = 0;
  for (double m : mass) {
    if (m > kZeroAtom) ++n;
  }
  return n;
}

double SubProbVector::max_atom() const {
  double m = 0.0;
  for (double v : mass) m = std::max(m, v);
  return m;
}

void validate(const ProbVector& p) {
  if (p.labels.size() != p.mass.size()) {
    throw_error(ErrorKind::kInvalidParameter, "labels and mass lengths differ");
  }
  if (p.labels.empty()) {
    throw_error(ErrorKind::kInvalidParameter, "empty alphabet");
  }
  check_unique(p.labels, "symbol");
  check_nonnegative(p.mass, "mass");
  check_sum(std::accumulate(p.mass.begin(), p.mass.end(), 0.0), 1.0, "mass");
}

void validate(const SubProbVector& p) {
  if (p.labels.size() != p.mass.size()) {
    throw_error(ErrorKind::kInvalidParameter, "labels and mass lengths differ");
  }
  check_unique(p.labels, "symbol");
  check_nonnegative(p.mass, "mass");
  double s = p.total();
  if (s > 1.0 + kNormTol) {
    throw_error(ErrorKind::kNotNormalized,
                "sub-probability mass sums to " + std::to_string(s));
  }
}

void validate(const JointDistribution& j) {
  if (j.values.size() != j.nx() * j.ny() || j.nx() == 0 || j.ny() == 0) {
    throw_error(ErrorKind::kInvalidParameter, "joint matrix shape mismatch");
  }
  check_unique(j.x_labels, "x");
  check_unique(j.y_labels, "y");
  check_nonnegative(j.values, "joint");
  check_sum(std::accumulate(j.values.begin(), j.values.end(), 0.0), 1.0, "joint");
}

void validate(const Channel& w) {
  if (w.values.size() != w.nx() * w.ny() || w.nx() == 0 || w.ny() == 0) {
    throw_error(ErrorKind::kInvalidParameter, "channel matrix shape mismatch");
  }
  check_unique(w.x_labels, "input");
  check_unique(w.y_labels, "output");
  check_nonnegative(w.values, "channel");
  for (std::size_t x = 0; x < w.nx(); ++x) {
    double s = 0.0;
    for (std::size_t y = 0; y < w.ny(); ++y) s += w.at(x, y);
    if (std::abs(s - 1.0) > kNormTol) {
      throw_error(ErrorKind::kNotNormalized,
                  "channel row " + std::to_string(x) + " sums to " +
                      std::to_string(s) + ", deviation " + std::to_string(s - 1.0));
    }
  }
}

std::size_t index_of_label(const std::vector<std::string>& labels, const std::string& label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw_error(ErrorKind::kUnknownSymbol, "label '" + label + "' not in alphabet");
  }
  return static_cast<std::size_t>(it - labels.begin());
}

JointDistribution joint_from_channel(const ProbVector& p_x, const Channel& w) {
  if (p_x.labels != w.x_labels) {
    throw_error(ErrorKind::kLabelMismatch,
                "input law labels do not match channel input labels");
  }
  JointDistribution j;
  j.x_labels = w.x_labels;
  j.y_labels = w.y_labels;
  j.values.resize(w.nx() * w.ny());
  for (std::size_t x = 0; x < w.nx(); ++x) {
    for (std::size_t y = 0; y < w.ny(); ++y) {
      j.at(x, y) = p_x.mass[x] * w.at(x, y);
    }
  }
  return j;
}

ProbVector marginal_x(const JointDistribution& j) {
  ProbVector p;
  p.labels = j.x_labels;
  p.mass.assign(j.nx(), 0.0);
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) p.mass[x] += j.at(x, y);
  }
  return p;
}

ProbVector marginal_y(const JointDistribution& j) {
  ProbVector p;
  p.labels = j.y_labels;
  p.mass.assign(j.ny(), 0.0);
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) p.mass[y] += j.at(x, y);
  }
  return p;
}

ProbVector conditional_x_given_y(const JointDistribution& j, const std::string& y) {
  std::size_t yi = index_of_label(j.y_labels, y);
  double py = 0.0;
  for (std::size_t x = 0; x < j.nx(); ++x) py += j.at(x, yi);
  if (py <= kZeroAtom) {
    throw_error(ErrorKind::kZeroConditioningEvent,
                "P(Y='" + y + "') is zero; conditional undefined");
  }
  ProbVector p;
  p.labels = j.x_labels;
  p.mass.resize(j.nx());
  for (std::size_t x = 0; x < j.nx(); ++x) p.mass[x] = j.at(x, yi) / py;
  return p;
}

double shannon_entropy(const ProbVector& p) {
  double h = 0.0;
  for (double m : p.mass) {
    if (m > kZeroAtom) h -= m * std::log2(m);
  }
  return h;
}

ProbVector flatten(const JointDistribution& j) {
  ProbVector p;
  p.labels.reserve(j.values.size());
  p.mass.reserve(j.values.size());
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) {
      p.labels.push_back(j.x_labels[x] + "|" + j.y_labels[y]);
      p.mass.push_back(j.at(x, y));
    }
  }
  return p;
}

double mutual_information(const JointDistribution& j) {
  double hx = shannon_entropy(marginal_x(j));
  double hy = shannon_entropy(marginal_y(j));
  double hxy = shannon_entropy(flatten(j));
  double mi = hx + hy - hxy;
  return mi < 0.0 && mi > -1e-12 ? 0.0 : mi;
}

}  // namespace oneshot
