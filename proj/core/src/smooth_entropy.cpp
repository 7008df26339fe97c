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

#include "oneshot/smooth_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oneshot/util.hpp"

namespace oneshot {
namespace {

std::size_t support_size(const std::vector<double>& mass) {
  std::size_t n = 0;
  for (double m : mass) {
    if (m > kZeroAtom) ++n;
  }
  return n;
}

struct Column {
  std::size_t y = 0;
  double p_y = 0.0;
  std::vector<std::size_t> x;    // atom rows, sorted by descending joint mass
  std::vector<double> joint;     // matching joint masses
  std::vector<double> suffix;    // suffix[k] = mass beyond the k largest atoms
};

// Positive-probability columns with their atoms sorted descending by joint
// mass; ties broken by row order so witnesses are deterministic.
std::vector<Column> positive_columns(const JointDistribution& j) {
  std::vector<Column> cols;
  for (std::size_t y = 0; y < j.ny(); ++y) {
    Column c;
    c.y = y;
    for (std::size_t x = 0; x < j.nx(); ++x) {
      double m = j.at(x, y);
      c.p_y += m;
      if (m > kZeroAtom) {
        c.x.push_back(x);
        c.joint.push_back(m);
      }
    }
    if (c.p_y <= kZeroAtom) continue;
    std::vector<std::size_t> order(c.x.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return c.joint[a] > c.joint[b];
    });
    Column sorted;
    sorted.y = c.y;
    sorted.p_y = c.p_y;
    for (std::size_t i : order) {
      sorted.x.push_back(c.x[i]);
      sorted.joint.push_back(c.joint[i]);
    }
    sorted.suffix.assign(sorted.joint.size() + 1, 0.0);
    for (std::size_t k = sorted.joint.size(); k-- > 0;) {
      sorted.suffix[k] = sorted.suffix[k + 1] + sorted.joint[k];
    }
    cols.push_back(std::move(sorted));
  }
  return cols;
}

}  // namespace

double h_min(const ProbVector& p) {
  double m = *std::max_element(p.mass.begin(), p.mass.end());
  return -std::log2(m);
}

double h_max(const ProbVector& p) {
  return std::log2(static_cast<double>(support_size(p.mass)));
}

double h_min_cond(const JointDistribution& j) {
  // min over y of -log max_x P(x|y) = -log of the largest conditional atom.
  double worst = 0.0;
  for (const Column& c : positive_columns(j)) {
    worst = std::max(worst, c.joint[0] / c.p_y);
  }
  return -std::log2(worst);
}

double h_max_cond(const JointDistribution& j) {
  std::size_t worst = 0;
  for (const Column& c : positive_columns(j)) {
    worst = std::max(worst, c.x.size());
  }
  return std::log2(static_cast<double>(worst));
}

SmoothingReport smooth_h_min(const ProbVector& p, Epsilon eps) {
  double c = cap_level(p.mass, std::vector<double>(p.mass.size(), 1.0), eps.value());
  SmoothingReport r;
  r.value_bits = -std::log2(c);
  SubProbVector w;
  w.labels = p.labels;
  w.mass.resize(p.mass.size());
  double kept = 0.0;
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    w.mass[i] = std::min(p.mass[i], c);
    kept += w.mass[i];
  }
  r.removed_mass = 1.0 - kept;
  if (r.removed_mass < 0.0) r.removed_mass = 0.0;
  r.witness = std::move(w);
  return r;
}

SmoothingReport smooth_h_max(const ProbVector& p, Epsilon eps) {
  // Deleting the smallest atoms first minimizes the surviving support for
  // any budget; ties broken by label position.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    if (p.mass[i] > kZeroAtom) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p.mass[a] < p.mass[b]; });
  std::vector<bool> deleted(p.mass.size(), false);
  double removed = 0.0;
  std::size_t kept = order.size();
  for (std::size_t i : order) {
    if (kept == 1) break;
    if (removed + p.mass[i] <= eps.value() + kMassSlack) {
      removed += p.mass[i];
      deleted[i] = true;
      --kept;
    } else {
      break;
    }
  }
  SmoothingReport r;
  r.value_bits = std::log2(static_cast<double>(kept));
  r.removed_mass = removed;
  SubProbVector w;
  w.labels = p.labels;
  w.mass.resize(p.mass.size());
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    w.mass[i] = deleted[i] ? 0.0 : p.mass[i];
  }
  r.witness = std::move(w);
  return r;
}

SmoothingReport smooth_h_min_cond(const JointDistribution& j, Epsilon eps) {
  std::vector<Column> cols = positive_columns(j);
  std::vector<double> values, weights;
  for (const Column& c : cols) {
    for (double m : c.joint) {
      values.push_back(m / c.p_y);
      weights.push_back(c.p_y);
    }
  }
  double cap = cap_level(values, weights, eps.value());

  SmoothingReport r;
  r.value_bits = -std::log2(cap);
  ConditionalWitness w;
  double removed = 0.0;
  for (const Column& c : cols) {
    SubProbVector q;
    q.labels.reserve(c.x.size());
    q.mass.reserve(c.x.size());
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      double cond = c.joint[i] / c.p_y;
      double keep = std::min(cond, cap);
      q.labels.push_back(j.x_labels[c.x[i]]);
      q.mass.push_back(keep);
      removed += c.p_y * (cond - keep);
    }
    w.y_labels.push_back(j.y_labels[c.y]);
    w.per_y.push_back(std::move(q));
  }
  r.removed_mass = removed;
  r.witness = std::move(w);
  return r;
}

SmoothingReport smooth_h_max_cond(const JointDistribution& j, Epsilon eps) {
  std::vector<Column> cols = positive_columns(j);
  std::size_t max_support = 0;
  for (const Column& c : cols) max_support = std::max(max_support, c.x.size());

  // For a fixed per-column support bound k the cheapest event keeps the k
  // heaviest atoms of every column, so feasibility is monotone in k.
  std::size_t k = max_support;
  for (std::size_t cand = 1; cand <= max_support; ++cand) {
    double removed = 0.0;
    for (const Column& c : cols) {
      removed += c.suffix[std::min(cand, c.x.size())];
    }
    if (removed <= eps.value() + kMassSlack) {
      k = cand;
      break;
    }
  }

  SmoothingReport r;
  r.value_bits = std::log2(static_cast<double>(k));
  ConditionalWitness w;
  double removed = 0.0;
  for (const Column& c : cols) {
    SubProbVector q;
    std::size_t kept = std::min(k, c.x.size());
    for (std::size_t i = 0; i < kept; ++i) {
      q.labels.push_back(j.x_labels[c.x[i]]);
      q.mass.push_back(c.joint[i] / c.p_y);
    }
    removed += c.suffix[kept];
    w.y_labels.push_back(j.y_labels[c.y]);
    w.per_y.push_back(std::move(q));
  }
  r.removed_mass = removed;
  r.witness = std::move(w);
  return r;
}

double reevaluate_witness_min(const SmoothingReport& r) {
  if (const auto* v = std::get_if<SubProbVector>(&r.witness)) {
    return -std::log2(v->max_atom());
  }
  const auto& cw = std::get<ConditionalWitness>(r.witness);
  double m = 0.0;
  for (const auto& q : cw.per_y) m = std::max(m, q.max_atom());
  return -std::log2(m);
}

double reevaluate_witness_max(const SmoothingReport& r) {
  if (const auto* v = std::get_if<SubProbVector>(&r.witness)) {
    return std::log2(static_cast<double>(v->support_size()));
  }
  const auto& cw = std::get<ConditionalWitness>(r.witness);
  std::size_t k = 0;
  for (const auto& q : cw.per_y) k = std::max(k, q.support_size());
  return std::log2(static_cast<double>(k));
}

}  // namespace oneshot
