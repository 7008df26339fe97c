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

#include "oneshot/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "oneshot/common_info.hpp"
#include "oneshot/smooth_entropy.hpp"
#include "oneshot/util.hpp"

namespace oneshot {
namespace {

// H_min^{eps} of the uniform law on m symbols: capping m equal atoms leaves
// (1 - eps)/m per atom.
double uniform_smooth_hmin(std::size_t m, double eps) {
  return std::log2(static_cast<double>(m) / (1.0 - eps));
}

// H_max^{level}(X|Y) for the joint induced by the uniform law on the given
// input subset, straight from the channel rows: keep the k heaviest atoms
// of every output column, smallest feasible k.
double subset_hmax_cond(const Channel& w, const std::vector<std::size_t>& subset,
                        double level) {
  const double m = static_cast<double>(subset.size());
  std::vector<std::vector<double>> cols(w.ny());
  for (std::size_t x : subset) {
    for (std::size_t y = 0; y < w.ny(); ++y) {
      double v = w.at(x, y) / m;
      if (v > kZeroAtom) cols[y].push_back(v);
    }
  }
  std::size_t max_support = 0;
  for (auto& c : cols) {
    std::sort(c.begin(), c.end(), std::greater<>());
    max_support = std::max(max_support, c.size());
  }
  for (std::size_t k = 1; k <= max_support; ++k) {
    double removed = 0.0;
    for (const auto& c : cols) {
      for (std::size_t i = k; i < c.size(); ++i) removed += c[i];
    }
    if (removed <= level + kMassSlack) return std::log2(static_cast<double>(k));
  }
  return std::log2(static_cast<double>(std::max<std::size_t>(max_support, 1)));
}

// Maximizes fn over nonempty input subsets: exhaustively up to 14 inputs,
// otherwise by steepest-ascent single-symbol moves from the full set.
template <typename Fn>
std::pair<double, std::vector<std::size_t>> maximize_over_subsets(std::size_t nx, Fn fn) {
  std::vector<std::size_t> best_subset;
  double best = -1e300;
  if (nx <= 14) {
    for (std::uint32_t mask = 1; mask < (1u << nx); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t x = 0; x < nx; ++x) {
        if (mask & (1u << x)) subset.push_back(x);
      }
      double v = fn(subset);
      if (v > best + 1e-15) {
        best = v;
        best_subset = std::move(subset);
      }
    }
    return {best, best_subset};
  }
  std::vector<bool> in(nx, true);
  auto materialize = [&] {
    std::vector<std::size_t> s;
    for (std::size_t x = 0; x < nx; ++x) {
      if (in[x]) s.push_back(x);
    }
    return s;
  };
  best_subset = materialize();
  best = fn(best_subset);
  bool improved = true;
  while (improved) {
    improved = false;
    std::size_t flip = nx;
    double flip_value = best;
    for (std::size_t x = 0; x < nx; ++x) {
      std::size_t count = best_subset.size();
      if (in[x] && count == 1) continue;
      in[x] = !in[x];
      double v = fn(materialize());
      in[x] = !in[x];
      if (v > flip_value + 1e-12) {
        flip_value = v;
        flip = x;
      }
    }
    if (flip < nx) {
      in[flip] = !in[flip];
      best = flip_value;
      best_subset = materialize();
      improved = true;
    }
  }
  return {best, best_subset};
}

ProbVector subset_uniform_law(const Channel& w, const std::vector<std::size_t>& subset) {
  ProbVector p;
  p.labels = w.x_labels;
  p.mass.assign(w.nx(), 0.0);
  for (std::size_t x : subset) p.mass[x] = 1.0 / static_cast<double>(subset.size());
  return p;
}

}  // namespace

CodeErrors evaluate_code(const Channel& w, const Code& c) {
  if (c.codebook.empty()) {
    throw_error(ErrorKind::kInvalidParameter, "empty codebook");
  }
  std::vector<std::size_t> rows;
  std::set<std::string> seen;
  for (const auto& s : c.codebook) {
    if (!seen.insert(s).second) {
      throw_error(ErrorKind::kInvalidParameter, "codeword '" + s + "' repeated");
    }
    rows.push_back(index_of_label(w.x_labels, s));
  }
  std::vector<int> dec(w.ny(), -1);
  for (const auto& [label, msg] : c.decoder) {
    std::size_t y = index_of_label(w.y_labels, label);
    if (msg < 0 || static_cast<std::size_t>(msg) >= c.codebook.size()) {
      throw_error(ErrorKind::kUnknownSymbol,
                  "decoder maps '" + label + "' to unknown message " + std::to_string(msg));
    }
    dec[y] = msg;
  }
  for (std::size_t y = 0; y < w.ny(); ++y) {
    if (dec[y] >= 0) continue;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (w.at(rows[i], y) > kZeroAtom) {
        throw_error(ErrorKind::kUnknownSymbol,
                    "decoder undefined for reachable output '" + w.y_labels[y] + "'");
      }
    }
  }
  CodeErrors e;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double correct = 0.0;
    for (std::size_t y = 0; y < w.ny(); ++y) {
      if (dec[y] == static_cast<int>(i)) correct += w.at(rows[i], y);
    }
    double err = 1.0 - correct;
    e.max_error = std::max(e.max_error, err);
    e.avg_error += err;
  }
  e.avg_error /= static_cast<double>(rows.size());
  return e;
}

CapacityBounds capacity_lower(const Channel& w, Epsilon eps, Epsilon eps_p, Epsilon eps_pp) {
  if (eps.value() <= eps_p.value() + eps_pp.value()) {
    throw_error(ErrorKind::kInvalidEpsilonBudget, "need eps > eps' + eps''");
  }
  auto objective = [&](const std::vector<std::size_t>& s) {
    return uniform_smooth_hmin(s.size(), eps_p.value()) -
           subset_hmax_cond(w, s, eps_pp.value());
  };
  auto [best, subset] = maximize_over_subsets(w.nx(), objective);
  double gap = eps.value() - eps_p.value() - eps_pp.value();
  double penalty = std::log2(4.0 * eps.value() / (gap * gap));
  CapacityBounds out;
  out.eps = eps.value();
  out.eps_prime = eps_p.value();
  out.eps_pp = eps_pp.value();
  out.lower_bits = std::max(0.0, best - penalty);
  out.lower_witness = subset_uniform_law(w, subset);
  return out;
}

CapacityBounds capacity_upper(const Channel& w, Epsilon eps, Epsilon eps1, Epsilon eps2) {
  if (eps1.value() <= 0.0) {
    throw_error(ErrorKind::kInvalidEpsilonBudget, "eps1 must be positive");
  }
  double level = eps1.value() + eps2.value() + 2.0 * eps.value();
  if (level >= 1.0) {
    throw_error(ErrorKind::kInvalidEpsilonBudget, "eps1 + eps2 + 2*eps must be below 1");
  }
  auto objective = [&](const std::vector<std::size_t>& s) {
    return uniform_smooth_hmin(s.size(), eps2.value()) - subset_hmax_cond(w, s, level);
  };
  auto [best, subset] = maximize_over_subsets(w.nx(), objective);
  (void)subset;
  CapacityBounds out;
  out.eps = eps.value();
  out.eps1 = eps1.value();
  out.eps2 = eps2.value();
  out.upper_bits = std::max(0.0, best + std::log2(1.0 / eps1.value()));
  return out;
}

CminMaximize cmin_maximize(const Channel& w, Epsilon eps) {
  auto objective = [&](const std::vector<std::size_t>& s) {
    JointDistribution j = joint_from_channel(subset_uniform_law(w, s), w);
    return c_min_lower(j, eps).lower_bits;
  };
  auto [best, subset] = maximize_over_subsets(w.nx(), objective);
  CminMaximize out;
  out.bits = best;
  out.witness_input = subset_uniform_law(w, subset);
  return out;
}

std::size_t build_code_sample_count(const Channel& w, const ProbVector& p_x, Epsilon eps1,
                                    Epsilon eps2, Epsilon eps3) {
  if (eps3.value() <= 0.0) {
    throw_error(ErrorKind::kInvalidEpsilonBudget, "eps3 must be positive");
  }
  JointDistribution j = joint_from_channel(p_x, w);
  double hmin = smooth_h_min(marginal_x(j), eps1).value_bits;
  double hmax = smooth_h_max_cond(j, eps2).value_bits;
  double raw = std::exp2(hmin - hmax - std::log2(1.0 / eps3.value()));
  double count = std::ceil(raw - 1e-12);
  if (count > static_cast<double>(1u << 20)) {
    throw_error(ErrorKind::kBudgetExceeded, "sample count beyond desk scale");
  }
  return count < 1.0 ? 1u : static_cast<std::size_t>(count);
}

Code build_code(const Channel& w, const ProbVector& p_x, Epsilon eps1, Epsilon eps2,
                Epsilon eps3, Epsilon eps, std::uint64_t rng_seed) {
  return build_code_report(w, p_x, eps1, eps2, eps3, eps, rng_seed).code;
}

BuildReport build_code_report(const Channel& w, const ProbVector& p_x, Epsilon eps1,
                              Epsilon eps2, Epsilon eps3, Epsilon eps,
                              std::uint64_t rng_seed) {
  JointDistribution j = joint_from_channel(p_x, w);
  SmoothingReport input_report = smooth_h_min(marginal_x(j), eps1);
  SmoothingReport cond_report = smooth_h_max_cond(j, eps2);
  std::size_t count = build_code_sample_count(w, p_x, eps1, eps2, eps3);

  // Codewords drawn from the capped input law, duplicates collapsed.
  const SubProbVector& smoothed = std::get<SubProbVector>(input_report.witness);
  std::vector<double> cumulative(smoothed.mass.size());
  std::partial_sum(smoothed.mass.begin(), smoothed.mass.end(), cumulative.begin());
  std::mt19937_64 rng(rng_seed);
  std::vector<std::size_t> codebook;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t x = sample_index(cumulative, rng);
    if (std::find(codebook.begin(), codebook.end(), x) == codebook.end()) {
      codebook.push_back(x);
    }
  }

  // Consistency sets from the truncated conditional supports.
  const auto& cw = std::get<ConditionalWitness>(cond_report.witness);
  std::vector<std::vector<bool>> consistent(w.ny(), std::vector<bool>(w.nx(), false));
  std::vector<std::vector<double>> weight(w.ny(), std::vector<double>(w.nx(), 0.0));
  for (std::size_t c = 0; c < cw.y_labels.size(); ++c) {
    std::size_t y = index_of_label(w.y_labels, cw.y_labels[c]);
    const SubProbVector& q = cw.per_y[c];
    for (std::size_t i = 0; i < q.labels.size(); ++i) {
      if (q.mass[i] > kZeroAtom) {
        std::size_t x = index_of_label(w.x_labels, q.labels[i]);
        consistent[y][x] = true;
        weight[y][x] = q.mass[i];
      }
    }
  }

  auto most_probable = [&](std::size_t y, const std::vector<std::size_t>& msgs,
                           bool by_witness) {
    int best = -1;
    double best_w = -1.0;
    for (std::size_t m : msgs) {
      double v = by_witness ? weight[y][codebook[m]] : w.at(codebook[m], y);
      if (v > best_w + kZeroAtom) {
        best_w = v;
        best = static_cast<int>(m);
      }
    }
    return best;
  };

  std::vector<int> dec(w.ny(), 0);
  std::vector<std::size_t> all(codebook.size());
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t y = 0; y < w.ny(); ++y) {
    std::vector<std::size_t> hits;
    for (std::size_t m = 0; m < codebook.size(); ++m) {
      if (consistent[y][codebook[m]]) hits.push_back(m);
    }
    if (hits.size() == 1) {
      dec[y] = static_cast<int>(hits[0]);
    } else if (hits.size() > 1) {
      dec[y] = most_probable(y, hits, true);
    } else {
      dec[y] = most_probable(y, all, false);
    }
  }

  // Expurgate codewords whose exact error exceeds eps, then point orphaned
  // outputs at the likeliest survivor.
  std::vector<bool> keep(codebook.size(), false);
  std::vector<std::size_t> survivors;
  for (std::size_t m = 0; m < codebook.size(); ++m) {
    double correct = 0.0;
    for (std::size_t y = 0; y < w.ny(); ++y) {
      if (dec[y] == static_cast<int>(m)) correct += w.at(codebook[m], y);
    }
    if (1.0 - correct <= eps.value() + kMassSlack) {
      keep[m] = true;
      survivors.push_back(m);
    }
  }
  if (survivors.empty()) {
    throw_error(ErrorKind::kEmptyCode, "every sampled codeword exceeded the error budget");
  }

  std::vector<int> renumber(codebook.size(), -1);
  BuildReport report;
  report.sampled = count;
  report.distinct = codebook.size();
  report.expurgated = codebook.size() - survivors.size();
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    renumber[survivors[i]] = static_cast<int>(i);
    report.code.codebook.push_back(w.x_labels[codebook[survivors[i]]]);
  }
  for (std::size_t y = 0; y < w.ny(); ++y) {
    int m = dec[y];
    if (!keep[m]) m = most_probable(y, survivors, false);
    report.code.decoder[w.y_labels[y]] = renumber[m];
  }
  report.errors = evaluate_code(w, report.code);
  return report;
}

double asymptotic_capacity(const Channel& w, double tol) {
  if (!(tol > 0.0)) throw_error(ErrorKind::kInvalidParameter, "tolerance must be positive");
  const std::size_t nx = w.nx(), ny = w.ny();
  std::vector<double> p(nx, 1.0 / static_cast<double>(nx));
  std::vector<double> q(ny, 0.0), d(nx, 0.0);
  for (int iter = 0; iter < 200000; ++iter) {
    std::fill(q.begin(), q.end(), 0.0);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < ny; ++y) q[y] += p[x] * w.at(x, y);
    }
    double lower = 0.0, upper = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
      d[x] = 0.0;
      for (std::size_t y = 0; y < ny; ++y) {
        double v = w.at(x, y);
        if (v > kZeroAtom && q[y] > 0.0) d[x] += v * std::log2(v / q[y]);
      }
      lower += p[x] * d[x];
      upper = std::max(upper, d[x]);
    }
    if (upper - lower <= tol) return std::max(0.0, lower);
    double norm = 0.0;
    for (std::size_t x = 0; x < nx; ++x) {
      p[x] *= std::exp2(d[x] - upper);  // shift before exponentiating
      norm += p[x];
    }
    for (double& v : p) v /= norm;
  }
  throw_error(ErrorKind::kBudgetExceeded, "alternating maximization did not converge");
}

}  // namespace oneshot
