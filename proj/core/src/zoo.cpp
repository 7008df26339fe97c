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

#include "oneshot/zoo.hpp"

#include <cmath>
#include <random>

#include "oneshot/util.hpp"

namespace oneshot::zoo {
namespace {

std::vector<std::string> numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = prefix + std::to_string(i);
  return labels;
}

void check_prob(double p, const char* what) {
  if (!(p >= 0.0) || !(p <= 1.0)) {
    throw_error(ErrorKind::kInvalidParameter,
                std::string(what) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

// Uniform point on the simplex via normalized exponentials, with hand-rolled
// inverse-CDF sampling so streams do not depend on the standard library's
// distribution internals.
std::vector<double> simplex_point(std::size_t n, std::mt19937_64& rng) {
  std::vector<double> e(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double u = uniform_double(rng);
    e[i] = -std::log1p(-u);
    total += e[i];
  }
  for (double& v : e) v /= total;
  return e;
}

}  // namespace

Channel identity(std::size_t n) {
  if (n < 1) throw_error(ErrorKind::kInvalidParameter, "identity needs n >= 1");
  Channel w;
  w.x_labels = numbered(n, "x");
  w.y_labels = numbered(n, "y");
  w.values.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) w.at(i, i) = 1.0;
  return w;
}

Channel bsc(double p) {
  check_prob(p, "crossover probability");
  Channel w;
  w.x_labels = {"x0", "x1"};
  w.y_labels = {"y0", "y1"};
  w.values = {1.0 - p, p, p, 1.0 - p};
  return w;
}

Channel bec(double p) {
  check_prob(p, "erasure probability");
  Channel w;
  w.x_labels = {"x0", "x1"};
  w.y_labels = {"y0", kErasureLabel, "y1"};
  w.values = {1.0 - p, p, 0.0, 0.0, p, 1.0 - p};
  return w;
}

Channel zchannel(double p) {
  check_prob(p, "decay probability");
  Channel w;
  w.x_labels = {"x0", "x1"};
  w.y_labels = {"y0", "y1"};
  w.values = {1.0, 0.0, p, 1.0 - p};
  return w;
}

Channel random_channel(std::size_t nx, std::size_t ny, std::uint64_t seed) {
  if (nx < 1 || ny < 1) {
    throw_error(ErrorKind::kInvalidParameter, "random channel needs nx, ny >= 1");
  }
  std::mt19937_64 rng(seed);
  Channel w;
  w.x_labels = numbered(nx, "x");
  w.y_labels = numbered(ny, "y");
  w.values.reserve(nx * ny);
  for (std::size_t x = 0; x < nx; ++x) {
    for (double v : simplex_point(ny, rng)) w.values.push_back(v);
  }
  return w;
}

ProbVector uniform(std::size_t n, const std::string& prefix) {
  if (n < 1) throw_error(ErrorKind::kInvalidParameter, "uniform needs n >= 1");
  ProbVector p;
  p.labels = numbered(n, prefix);
  p.mass.assign(n, 1.0 / static_cast<double>(n));
  return p;
}

JointDistribution equal(std::size_t n) {
  if (n < 1) throw_error(ErrorKind::kInvalidParameter, "equal needs n >= 1");
  JointDistribution j;
  j.x_labels = numbered(n, "x");
  j.y_labels = numbered(n, "y");
  j.values.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) j.at(i, i) = 1.0 / static_cast<double>(n);
  return j;
}

JointDistribution product(const ProbVector& p, const ProbVector& q) {
  JointDistribution j;
  j.x_labels = p.labels;
  j.y_labels = q.labels;
  j.values.reserve(p.size() * q.size());
  for (double a : p.mass) {
    for (double b : q.mass) j.values.push_back(a * b);
  }
  return j;
}

JointDistribution blocks(const std::vector<double>& masses,
                         const std::vector<std::pair<std::size_t, std::size_t>>& sizes) {
  if (masses.size() != sizes.size() || masses.empty()) {
    throw_error(ErrorKind::kInvalidParameter, "need one size pair per block mass");
  }
  std::size_t nx = 0, ny = 0;
  for (const auto& [bx, by] : sizes) {
    if (bx < 1 || by < 1) throw_error(ErrorKind::kInvalidParameter, "empty block");
    nx += bx;
    ny += by;
  }
  JointDistribution j;
  j.x_labels = numbered(nx, "x");
  j.y_labels = numbered(ny, "y");
  j.values.assign(nx * ny, 0.0);
  std::size_t x0 = 0, y0 = 0;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    auto [bx, by] = sizes[b];
    double atom = masses[b] / static_cast<double>(bx * by);
    for (std::size_t dx = 0; dx < bx; ++dx) {
      for (std::size_t dy = 0; dy < by; ++dy) j.at(x0 + dx, y0 + dy) = atom;
    }
    x0 += bx;
    y0 += by;
  }
  return j;
}

JointDistribution random_joint(std::size_t nx, std::size_t ny, std::size_t support,
                               std::uint64_t seed) {
  if (nx < 1 || ny < 1 || support < 1 || support > nx * ny) {
    throw_error(ErrorKind::kInvalidParameter, "bad random joint shape");
  }
  std::mt19937_64 rng(seed);
  JointDistribution j;
  j.x_labels = numbered(nx, "x");
  j.y_labels = numbered(ny, "y");
  j.values.assign(nx * ny, 0.0);
  // Fisher-Yates prefix picks the support cells, then a simplex point
  // spreads mass over them.
  std::vector<std::size_t> cells(nx * ny);
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = i;
  for (std::size_t i = 0; i < support; ++i) {
    std::size_t pick = i + static_cast<std::size_t>(rng() % (cells.size() - i));
    std::swap(cells[i], cells[pick]);
  }
  std::vector<double> mass = simplex_point(support, rng);
  for (std::size_t i = 0; i < support; ++i) j.values[cells[i]] = mass[i];
  return j;
}

std::vector<std::pair<std::string, JointDistribution>> tiny_joint_corpus() {
  std::vector<std::pair<std::string, JointDistribution>> corpus;
  corpus.emplace_back("equal2", equal(2));
  corpus.emplace_back("equal3", equal(3));
  corpus.emplace_back("equal4", equal(4));
  corpus.emplace_back("product_u2_u2", product(uniform(2, "x"), uniform(2, "y")));
  corpus.emplace_back("product_u2_u3", product(uniform(2, "x"), uniform(3, "y")));
  corpus.emplace_back("blocks_half_half", blocks({0.5, 0.5}, {{2, 2}, {2, 2}}));
  corpus.emplace_back("blocks_60_40", blocks({0.6, 0.4}, {{2, 2}, {2, 2}}));
  {
    JointDistribution j = equal(3);
    j.at(0, 0) = 0.5;
    j.at(1, 1) = 0.25;
    j.at(2, 2) = 0.25;
    corpus.emplace_back("skewed_diag3", j);
  }
  corpus.emplace_back("bsc01_uniform", joint_from_channel(uniform(2, "x"), bsc(0.1)));
  corpus.emplace_back("bsc03_uniform", joint_from_channel(uniform(2, "x"), bsc(0.3)));
  corpus.emplace_back("bec02_uniform", joint_from_channel(uniform(2, "x"), bec(0.2)));
  corpus.emplace_back("zchannel02_uniform",
                      joint_from_channel(uniform(2, "x"), zchannel(0.2)));
  corpus.emplace_back("random_3x3_a", random_joint(3, 3, 7, 11));
  corpus.emplace_back("random_3x3_b", random_joint(3, 3, 9, 12));
  corpus.emplace_back("random_4x4_sparse", random_joint(4, 4, 10, 13));
  corpus.emplace_back("random_4x3", random_joint(4, 3, 8, 14));
  return corpus;
}

std::vector<std::pair<std::string, Channel>> tiny_channel_corpus() {
  std::vector<std::pair<std::string, Channel>> corpus;
  corpus.emplace_back("identity2", identity(2));
  corpus.emplace_back("identity3", identity(3));
  corpus.emplace_back("identity4", identity(4));
  corpus.emplace_back("bsc01", bsc(0.1));
  corpus.emplace_back("bsc03", bsc(0.3));
  corpus.emplace_back("bec01", bec(0.1));
  corpus.emplace_back("bec02", bec(0.2));
  corpus.emplace_back("zchannel02", zchannel(0.2));
  for (int i = 0; i < 20; ++i) {
    corpus.emplace_back("random3x3_seed" + std::to_string(100 + i),
                        random_channel(3, 3, 100 + i));
  }
  return corpus;
}

}  // namespace oneshot::zoo
