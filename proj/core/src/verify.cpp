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

#include "oneshot/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "oneshot/capacity.hpp"
#include "oneshot/common_info.hpp"
#include "oneshot/io.hpp"
#include "oneshot/oracle.hpp"
#include "oneshot/smooth_entropy.hpp"
#include "oneshot/tasks.hpp"
#include "oneshot/util.hpp"
#include "oneshot/zoo.hpp"

namespace oneshot::verify {
namespace {

constexpr double kTol = 1e-9;

JointDistribution random_joint_for_suite(std::mt19937_64& rng, std::size_t max_side,
                                         std::size_t max_atoms) {
  std::size_t nx = 2 + rng() % (max_side - 1);
  std::size_t ny = 2 + rng() % (max_side - 1);
  std::size_t cells = nx * ny;
  std::size_t support = 2 + rng() % std::min(max_atoms - 1, cells - 1);
  return zoo::random_joint(nx, ny, support, rng());
}

ProbVector random_dist_for_suite(std::mt19937_64& rng, std::size_t max_atoms) {
  std::size_t n = 2 + rng() % (max_atoms - 1);
  ProbVector p;
  p.mass.resize(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    p.labels.push_back("x" + std::to_string(i));
    p.mass[i] = -std::log1p(-uniform_double(rng));
    total += p.mass[i];
  }
  for (double& m : p.mass) m /= total;
  return p;
}

struct ViolationStats {
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst = 0.0;

  void require(bool pass, double slack) {
    ++checked;
    if (!pass) {
      ++violations;
      worst = std::max(worst, slack);
    }
  }
  void merge(const ViolationStats& other) {
    checked += other.checked;
    violations += other.violations;
    worst = std::max(worst, other.worst);
  }
  std::string summary() const {
    std::string s = std::to_string(violations) + " violations over " +
                    std::to_string(checked) + " checks";
    if (violations) s += ", worst slack " + format_double(worst);
    return s;
  }
};

}  // namespace

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

CheckResult chain_rule_suite(std::size_t joints, std::size_t tuples_per_joint) {
  // One independent stream per instance: results do not depend on how the
  // loop is chunked across threads.
  std::vector<ViolationStats> slots(joints);
  parallel_for(joints, [&](std::size_t i) {
    std::mt19937_64 rng(0x5EED0001 + 0x9E3779B97F4A7C15ull * (i + 1));
    ViolationStats& stats = slots[i];
    JointDistribution j = random_joint_for_suite(rng, 6, 36);
    ProbVector pair = flatten(j);
    ProbVector side = marginal_y(j);
    for (std::size_t t = 0; t < tuples_per_joint; ++t) {
      double eps = 0.02 + 0.58 * uniform_double(rng);
      double eps_p = uniform_double(rng) * std::min(0.3, 0.9 * (1.0 - eps));
      double eps1 = 0.4 * eps * uniform_double(rng);
      double eps2 = 0.4 * eps * uniform_double(rng);

      double hmax_cond = smooth_h_max_cond(j, Epsilon(eps)).value_bits;
      double hmin_cond = smooth_h_min_cond(j, Epsilon(eps)).value_bits;

      // Pair minus marginal brackets the conditional from both sides.
      double lhs_a = smooth_h_max(pair, Epsilon(eps + eps_p)).value_bits -
                     smooth_h_max(side, Epsilon(eps_p)).value_bits;
      stats.require(lhs_a <= hmax_cond + kTol, lhs_a - hmax_cond);

      double rhs_d = smooth_h_min(pair, Epsilon(eps + eps_p)).value_bits -
                     smooth_h_min(side, Epsilon(eps_p)).value_bits;
      stats.require(hmin_cond <= rhs_d + kTol, hmin_cond - rhs_d);

      double gap = eps - eps1 - eps2;
      if (gap > 0.0) {
        double penalty = std::log2(1.0 / gap);
        double rhs_b = smooth_h_max(pair, Epsilon(eps1)).value_bits -
                       smooth_h_min(side, Epsilon(eps2)).value_bits + penalty;
        stats.require(hmax_cond <= rhs_b + kTol, hmax_cond - rhs_b);

        double lhs_c = smooth_h_min(pair, Epsilon(eps1)).value_bits -
                       smooth_h_max(side, Epsilon(eps2)).value_bits - penalty;
        stats.require(lhs_c <= hmin_cond + kTol, lhs_c - hmin_cond);
      }
    }
  });
  ViolationStats stats;
  for (const auto& s : slots) stats.merge(s);
  return {"chain-rule", stats.violations == 0, stats.summary()};
}

CheckResult smooth_oracle_suite(std::size_t instances) {
  std::vector<double> gaps(instances, 0.0);
  parallel_for(instances, [&](std::size_t i) {
    std::mt19937_64 rng(0x5EED0002 + 0x9E3779B97F4A7C15ull * (i + 1));
    Epsilon eps(0.6 * uniform_double(rng));
    double fast = 0.0, exact = 0.0;
    switch (i % 4) {
      case 0: {
        ProbVector p = random_dist_for_suite(rng, 12);
        fast = smooth_h_min(p, eps).value_bits;
        exact = oracle::exact_smooth_entropy(p, eps, oracle::EntropyKind::kMin,
                                             oracle::Formulation::kEvent);
        break;
      }
      case 1: {
        ProbVector p = random_dist_for_suite(rng, 12);
        fast = smooth_h_max(p, eps).value_bits;
        exact = oracle::exact_smooth_entropy(p, eps, oracle::EntropyKind::kMax,
                                             oracle::Formulation::kEvent);
        break;
      }
      case 2: {
        JointDistribution j = random_joint_for_suite(rng, 4, 12);
        fast = smooth_h_min_cond(j, eps).value_bits;
        exact = oracle::exact_smooth_entropy(j, eps, oracle::EntropyKind::kMin,
                                             oracle::Formulation::kEvent);
        break;
      }
      default: {
        JointDistribution j = random_joint_for_suite(rng, 4, 12);
        fast = smooth_h_max_cond(j, eps).value_bits;
        exact = oracle::exact_smooth_entropy(j, eps, oracle::EntropyKind::kMax,
                                             oracle::Formulation::kEvent);
        break;
      }
    }
    gaps[i] = std::abs(fast - exact);
  });
  ViolationStats stats;
  double worst_gap = 0.0;
  for (double gap : gaps) {
    worst_gap = std::max(worst_gap, gap);
    stats.require(gap <= kTol, gap);
  }
  CheckResult r{"smooth-oracle-equivalence", stats.violations == 0, stats.summary()};
  r.details += ", max |fast - oracle| " + format_double(worst_gap);
  return r;
}

CheckResult ext_sandwich_suite() {
  ViolationStats stats;
  for (const auto& [name, j] : zoo::tiny_joint_corpus()) {
    if (j.nx() > 4 || j.ny() > 4) continue;
    for (double e : {0.0, 0.1, 0.25}) {
      Epsilon eps(e), eps_prime(e / 2.0);
      double exact = oracle::exact_c_ext(j, eps);
      ExtBounds bounds = c_ext_bounds(j, eps, eps_prime);
      stats.require(bounds.lower_bits <= exact + kTol, bounds.lower_bits - exact);
      if (bounds.upper_bits) {
        stats.require(exact <= *bounds.upper_bits + kTol, exact - *bounds.upper_bits);
      }
    }
  }
  return {"ext-sandwich", stats.violations == 0, stats.summary()};
}

CheckResult cmin_sandwich_suite() {
  ViolationStats stats;
  static const std::pair<double, double> kSplits[] = {
      {0.1, 0.0}, {0.1, 0.1}, {0.25, 0.0}, {0.25, 0.1}, {0.4, 0.0}};
  for (const auto& [name, j] : zoo::tiny_joint_corpus()) {
    for (double e : {0.0, 0.1, 0.25}) {
      Epsilon eps(e);
      double exact = oracle::exact_c_min(j, eps);
      double lower = c_min_lower(j, eps).lower_bits;
      stats.require(lower <= exact + kTol, lower - exact);
      for (auto [e1, e2] : kSplits) {
        if (e1 + e2 + 2.0 * e >= 1.0) continue;
        double upper = c_min_upper(j, eps, Epsilon(e1), Epsilon(e2));
        stats.require(exact <= upper + kTol, exact - upper);
      }
    }
  }
  return {"cmin-sandwich", stats.violations == 0, stats.summary()};
}

CheckResult capacity_sandwich_suite(bool include_random_channels) {
  ViolationStats stats;
  static const std::pair<double, double> kUpperSplits[] = {
      {0.1, 0.0}, {0.25, 0.0}, {0.25, 0.1}, {0.4, 0.0}};
  for (const auto& [name, w] : zoo::tiny_channel_corpus()) {
    if (!include_random_channels && name.rfind("random", 0) == 0) continue;
    for (double e : {0.05, 0.1, 0.2}) {
      Epsilon eps(e);
      double exact = oracle::exact_one_shot_capacity(w, eps);

      for (auto [num_p, num_pp] : {std::pair{4.0, 4.0}, std::pair{2.0, 4.0}}) {
        Epsilon ep(e / num_p), epp(e / num_pp);
        double lower = *capacity_lower(w, eps, ep, epp).lower_bits;
        stats.require(lower <= exact + kTol, lower - exact);
      }
      for (auto [e1, e2] : kUpperSplits) {
        if (e1 + e2 + 2.0 * e >= 1.0) continue;
        double upper = *capacity_upper(w, eps, Epsilon(e1), Epsilon(e2)).upper_bits;
        stats.require(exact <= upper + kTol, exact - upper);
      }

      // Common-part route with the exact enumeration on both sides.
      auto max_exact_cmin = [&](Epsilon budget) {
        double best = 0.0;
        for (std::uint32_t mask = 1; mask < (1u << w.nx()); ++mask) {
          ProbVector p;
          p.labels = w.x_labels;
          p.mass.assign(w.nx(), 0.0);
          std::size_t m = 0;
          for (std::size_t x = 0; x < w.nx(); ++x) {
            if (mask & (1u << x)) ++m;
          }
          for (std::size_t x = 0; x < w.nx(); ++x) {
            if (mask & (1u << x)) p.mass[x] = 1.0 / static_cast<double>(m);
          }
          best = std::max(best,
                          oracle::exact_c_min(joint_from_channel(p, w), budget));
        }
        return best;
      };
      double route_upper = max_exact_cmin(eps);
      stats.require(exact <= route_upper + kTol, exact - route_upper);
      double route_lower =
          max_exact_cmin(Epsilon(e / 2.0)) - std::log2(e / (e - e / 2.0));
      stats.require(route_lower <= exact + kTol, route_lower - exact);
    }
  }
  return {"capacity-sandwich", stats.violations == 0, stats.summary()};
}

CheckResult closed_form_anchor_suite() {
  ViolationStats stats;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (double e : {0.05, 0.2, 0.49}) {
      double cap = oracle::exact_one_shot_capacity(zoo::identity(n), Epsilon(e));
      stats.require(std::abs(cap - std::log2(static_cast<double>(n))) <= kTol,
                    std::abs(cap - std::log2(static_cast<double>(n))));
    }
  }
  for (double p : {0.1, 0.2}) {
    for (double e : {p, 0.3, 0.49}) {
      double cap = oracle::exact_one_shot_capacity(zoo::bec(p), Epsilon(e));
      stats.require(std::abs(cap - 1.0) <= kTol, std::abs(cap - 1.0));
    }
  }
  double ba = asymptotic_capacity(zoo::bsc(0.11), 1e-9);
  double want = 1.0 - binary_entropy(0.11);
  stats.require(std::abs(ba - want) <= 1e-6, std::abs(ba - want));

  stats.require(std::abs(asymptotic_capacity(zoo::identity(8), 1e-9) - 3.0) <= 1e-6, 0.0);
  stats.require(std::abs(asymptotic_capacity(zoo::bsc(0.5), 1e-9)) <= 1e-6, 0.0);
  double bec_cap = asymptotic_capacity(zoo::bec(0.2), 1e-9);
  stats.require(std::abs(bec_cap - 0.8) <= 1e-6, std::abs(bec_cap - 0.8));
  double z_want = std::log2(1.0 + 0.8 * std::pow(0.2, 0.25));
  double z_cap = asymptotic_capacity(zoo::zchannel(0.2), 1e-9);
  stats.require(std::abs(z_cap - z_want) <= 1e-6, std::abs(z_cap - z_want));
  return {"closed-form-anchors", stats.violations == 0, stats.summary()};
}

CheckResult coding_markov_suite(std::size_t seeds) {
  Channel w = zoo::identity(16);
  ProbVector p = zoo::uniform(16, "x");
  Epsilon eps1(0.0), eps2(0.0), eps3(0.25), eps(0.5);
  const double retain_fraction = (0.5 - 0.25) / 0.5;
  std::size_t good = 0;
  std::size_t hard_failures = 0;
  for (std::size_t s = 1; s <= seeds; ++s) {
    try {
      BuildReport r = build_code_report(w, p, eps1, eps2, eps3, eps, s);
      if (r.errors.max_error > eps.value() + kTol) ++hard_failures;
      bool floor_ok = static_cast<double>(r.code.codebook.size()) + kTol >=
                      retain_fraction * static_cast<double>(r.distinct);
      if (r.errors.max_error <= eps.value() + kTol && floor_ok &&
          r.code.codebook.size() >= 2) {
        ++good;
      }
    } catch (const Error&) {
      // an empty code counts as a failed seed
    }
  }
  bool pass = hard_failures == 0 && good * 100 >= seeds * 95;
  return {"coding-markov",
          pass,
          std::to_string(good) + "/" + std::to_string(seeds) +
              " seeds met the error and retention floor; " +
              std::to_string(hard_failures) + " exceeded the error budget"};
}

CheckResult operational_bounds_suite() {
  ViolationStats stats;
  std::vector<std::pair<std::string, JointDistribution>> corpus = zoo::tiny_joint_corpus();
  corpus.emplace_back("uniform64_trivial_side",
                      zoo::product(zoo::uniform(64, "x"), zoo::uniform(1, "y")));
  {
    // Eight symbols whose side information drops the low bit.
    JointDistribution j;
    j.x_labels = zoo::uniform(8, "x").labels;
    j.y_labels = zoo::uniform(4, "y").labels;
    j.values.assign(8 * 4, 0.0);
    for (std::size_t x = 0; x < 8; ++x) j.at(x, x / 2) = 1.0 / 8.0;
    corpus.emplace_back("erased_low_bit", j);
  }
  for (const auto& [name, j] : corpus) {
    for (double e : {0.1, 0.25, 0.5}) {
      double e_prime = e / 2.0;
      double penalty = std::log2(1.0 / (e - e_prime));

      double hmin = smooth_h_min_cond(j, Epsilon(e_prime)).value_bits;
      int ell = static_cast<int>(std::floor(hmin - 2.0 * penalty));
      if (ell < 0) ell = 0;
      TaskReport ext = extract(j, ell, 0);
      stats.require(ext.achieved_error <= e + kTol, ext.achieved_error - e);

      double hmax = smooth_h_max_cond(j, Epsilon(e_prime)).value_bits;
      int m = static_cast<int>(std::ceil(hmax + penalty));
      double expected = compress_expected_error(j, m);
      stats.require(expected <= e + kTol, expected - e);
    }
  }
  return {"operational-bounds", stats.violations == 0, stats.summary()};
}

std::vector<std::string> definitional_probes() {
  std::vector<std::string> notes;
  std::vector<ProbVector> dists;
  {
    ProbVector p;
    p.labels = {"a", "b", "c"};
    p.mass = {0.5, 0.25, 0.25};
    dists.push_back(p);
  }
  dists.push_back(zoo::uniform(4, "x"));
  std::vector<Epsilon> eps = {Epsilon(0.25), Epsilon(0.5)};
  for (auto& n : oracle::probe_formulation_gap(dists, eps)) notes.push_back(n);
  for (const auto& [name, j] : zoo::tiny_joint_corpus()) {
    if (j.nx() > 3 || j.ny() > 3) continue;
    for (auto& n : oracle::probe_alphabet_extension(j, Epsilon(0.25))) {
      notes.push_back(name + ": " + n);
    }
  }
  return notes;
}

SuiteReport run_suite(bool tiny) {
  SuiteReport report;
  report.checks.push_back(tiny ? chain_rule_suite(100, 3) : chain_rule_suite(1000, 10));
  report.checks.push_back(smooth_oracle_suite(tiny ? 60 : 500));
  report.checks.push_back(ext_sandwich_suite());
  report.checks.push_back(cmin_sandwich_suite());
  report.checks.push_back(capacity_sandwich_suite(!tiny));
  report.checks.push_back(closed_form_anchor_suite());
  report.checks.push_back(coding_markov_suite(tiny ? 20 : 100));
  report.checks.push_back(operational_bounds_suite());
  report.notes = definitional_probes();
  return report;
}

}  // namespace oneshot::verify
