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

#include "oneshot/tasks.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "oneshot/common_info.hpp"
#include "oneshot/hash.hpp"
#include "oneshot/smooth_entropy.hpp"

namespace oneshot {
namespace {

// Statistical distance between (h(X), Y) and uniform-ell x P_Y for one seed.
double extraction_distance(const JointDistribution& j, const HashFamily& family,
                           std::uint64_t seed, int ell) {
  const std::size_t bins = std::size_t{1} << ell;
  const double ideal = 1.0 / static_cast<double>(bins);
  double tv = 0.0;
  std::vector<double> bin_mass(bins);
  for (std::size_t y = 0; y < j.ny(); ++y) {
    std::fill(bin_mass.begin(), bin_mass.end(), 0.0);
    double p_y = 0.0;
    for (std::size_t x = 0; x < j.nx(); ++x) {
      double m = j.at(x, y);
      if (m <= kZeroAtom) continue;
      bin_mass[family.evaluate(seed, static_cast<std::uint32_t>(x))] += m;
      p_y += m;
    }
    for (double v : bin_mass) tv += std::abs(v - ideal * p_y);
  }
  return 0.5 * tv;
}

void attach_extraction_bounds(const JointDistribution& j, double err, TaskReport* r) {
  if (err > 0.0) {
    Epsilon half(err / 2.0);
    double lower = smooth_h_min_cond(j, half).value_bits - 2.0 * std::log2(2.0 / err);
    r->bound_lower = std::max(0.0, lower);
    r->bound_upper = smooth_h_min_cond(j, Epsilon(std::min(err, 1.0 - 1e-12))).value_bits;
  } else {
    r->bound_lower = 0.0;
    r->bound_upper = smooth_h_min_cond(j, Epsilon(0.0)).value_bits;
  }
}

}  // namespace

TaskReport extract(const JointDistribution& j, int ell, int seed_count) {
  if (ell < 0) throw_error(ErrorKind::kInvalidParameter, "output length must be >= 0");
  if ((std::uint64_t{1} << ell) > 2 * j.nx()) {
    throw_error(ErrorKind::kOutputTooLong,
                "extracting " + std::to_string(ell) + " bits from an alphabet of " +
                    std::to_string(j.nx()) + " symbols is vacuous");
  }
  HashFamily family = HashFamily::for_alphabet(j.nx(), static_cast<unsigned>(ell));
  // The additive part of the seed only relabels bins (cosets of the same
  // subgroup), so sweeping the multipliers alone is the exact family
  // average. Seeds 0 .. 2^k-2 are exactly the multipliers with offset 0.
  std::uint64_t sweeps = seed_count > 0
                             ? std::min<std::uint64_t>(seed_count, family.family_size())
                             : (std::uint64_t{1} << family.field_bits()) - 1;
  double total = 0.0, worst = 0.0;
  for (std::uint64_t s = 0; s < sweeps; ++s) {
    double d = extraction_distance(j, family, s, ell);
    total += d;
    worst = std::max(worst, d);
  }
  TaskReport r;
  r.achieved_length = ell;
  r.achieved_error = total / static_cast<double>(sweeps);
  r.worst_seed_error = worst;
  r.hash = family.describe();
  r.seed_count = static_cast<int>(sweeps);
  attach_extraction_bounds(j, r.achieved_error, &r);
  return r;
}

namespace {

double binning_error(const JointDistribution& j, const HashFamily& family,
                     std::uint64_t seed, int m) {
  // Decoder: inside the received bin, the symbol with the largest joint
  // mass in column y wins; earlier labels win ties.
  double err = 0.0;
  for (std::size_t y = 0; y < j.ny(); ++y) {
    for (std::size_t x = 0; x < j.nx(); ++x) {
      double mass = j.at(x, y);
      if (mass <= kZeroAtom) continue;
      std::uint32_t bin = family.evaluate(seed, static_cast<std::uint32_t>(x));
      for (std::size_t rival = 0; rival < j.nx(); ++rival) {
        if (rival == x) continue;
        if (family.evaluate(seed, static_cast<std::uint32_t>(rival)) != bin) continue;
        double rv = j.at(rival, y);
        if (rv > mass || (rv == mass && rival < x)) {
          err += mass;
          break;
        }
      }
    }
  }
  return err;
}

void attach_compression_bounds(const JointDistribution& j, double err, TaskReport* r) {
  r->bound_lower = smooth_h_max_cond(j, Epsilon(std::min(err, 1.0 - 1e-12))).value_bits;
  if (err > 0.0) {
    r->bound_upper =
        smooth_h_max_cond(j, Epsilon(err / 2.0)).value_bits + std::log2(2.0 / err);
  }
}

}  // namespace

TaskReport compress_with_side_info(const JointDistribution& j, int m, std::uint64_t seed) {
  if (m < 0) throw_error(ErrorKind::kInvalidParameter, "storage must be >= 0");
  HashFamily family = HashFamily::for_alphabet(j.nx(), static_cast<unsigned>(
                                                           std::min<std::size_t>(m, 16)));
  TaskReport r;
  r.achieved_storage = m;
  r.achieved_error = binning_error(j, family, seed, m);
  r.hash = family.describe();
  r.seed = seed;
  r.seed_count = 1;
  attach_compression_bounds(j, r.achieved_error, &r);
  return r;
}

double compress_expected_error(const JointDistribution& j, int m) {
  HashFamily family = HashFamily::for_alphabet(j.nx(), static_cast<unsigned>(
                                                           std::min<std::size_t>(m, 16)));
  // Bin membership is invariant under the additive part of the seed, so the
  // family expectation equals the average over the multipliers alone.
  std::uint64_t sweeps = (std::uint64_t{1} << family.field_bits()) - 1;
  double total = 0.0;
  for (std::uint64_t s = 0; s < sweeps; ++s) {
    total += binning_error(j, family, s, m);
  }
  return total / static_cast<double>(sweeps);
}

TaskReport extract_common(const JointDistribution& j, Epsilon eps_budget, int ell,
                          std::uint64_t seed) {
  if (ell < 0) throw_error(ErrorKind::kInvalidParameter, "output length must be >= 0");
  CminResult lower = c_min_lower(j, eps_budget);
  CommonPartition cp = gacs_korner(lower.perturbed_joint);

  const std::size_t bins = std::size_t{1} << ell;
  HashFamily family =
      HashFamily::for_alphabet(std::max<std::size_t>(cp.size(), bins),
                               static_cast<unsigned>(ell));
  // Symbols that lost all mass in the witness hash block 0 by convention.
  auto block_or_zero = [](int b) { return b < 0 ? 0u : static_cast<std::uint32_t>(b); };

  std::vector<double> law(bins * bins, 0.0);
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) {
      double mass = j.at(x, y);
      if (mass <= kZeroAtom) continue;
      std::uint32_t a = family.evaluate(seed, block_or_zero(cp.block_of_x[x]));
      std::uint32_t b = family.evaluate(seed, block_or_zero(cp.block_of_y[y]));
      law[a * bins + b] += mass;
    }
  }
  double disagree = 0.0;
  std::vector<double> alice(bins, 0.0);
  for (std::size_t a = 0; a < bins; ++a) {
    for (std::size_t b = 0; b < bins; ++b) {
      if (a != b) disagree += law[a * bins + b];
      alice[a] += law[a * bins + b];
    }
  }
  double tv = 0.0;
  const double ideal = 1.0 / static_cast<double>(bins);
  for (double v : alice) tv += std::abs(v - ideal);

  TaskReport r;
  r.achieved_length = ell;
  r.achieved_error = disagree + 0.5 * tv;
  r.hash = family.describe();
  r.seed = seed;
  r.seed_count = 1;
  return r;
}

}  // namespace oneshot
