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

#include <cmath>
#include <random>

#include "doctest.h"
#include "oneshot/oracle.hpp"
#include "oneshot/smooth_entropy.hpp"
#include "oneshot/util.hpp"
#include "oneshot/zoo.hpp"

using namespace oneshot;

namespace {

ProbVector make_pv(std::vector<double> mass) {
  ProbVector p;
  for (std::size_t i = 0; i < mass.size(); ++i) p.labels.push_back("x" + std::to_string(i));
  p.mass = std::move(mass);
  return p;
}

JointDistribution bsc_joint(double p) {
  return joint_from_channel(zoo::uniform(2, "x"), zoo::bsc(p));
}

double oracle_min(const ProbVector& p, double e) {
  return oracle::exact_smooth_entropy(p, Epsilon(e), oracle::EntropyKind::kMin,
                                      oracle::Formulation::kEvent);
}

double oracle_max(const ProbVector& p, double e) {
  return oracle::exact_smooth_entropy(p, Epsilon(e), oracle::EntropyKind::kMax,
                                      oracle::Formulation::kEvent);
}

}  // namespace

TEST_CASE("non-smooth entropies") {
  CHECK(h_min(zoo::uniform(8, "x")) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(h_min(make_pv({0.5, 0.3, 0.2})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(h_min(make_pv({1.0})) == doctest::Approx(0.0));

  CHECK(h_max(make_pv({0.9, 0.05, 0.05})) == doctest::Approx(std::log2(3.0)).epsilon(1e-12));
  CHECK(h_max(make_pv({1.0, 0.0})) == doctest::Approx(0.0));
  CHECK(h_max(zoo::uniform(8, "x")) == doctest::Approx(3.0));
}

TEST_CASE("conditional non-smooth entropies") {
  CHECK(h_min_cond(zoo::equal(2)) == doctest::Approx(0.0));
  CHECK(h_max_cond(zoo::equal(2)) == doctest::Approx(0.0));

  JointDistribution prod = zoo::product(zoo::uniform(2, "x"), zoo::uniform(2, "y"));
  CHECK(h_min_cond(prod) == doctest::Approx(1.0));
  CHECK(h_max_cond(prod) == doctest::Approx(1.0));

  CHECK(h_max_cond(bsc_joint(0.1)) == doctest::Approx(1.0));
  CHECK(h_min_cond(bsc_joint(0.1)) == doctest::Approx(-std::log2(0.9)).epsilon(1e-12));
}

TEST_CASE("smoothed min-entropy by water-filling, checked against the oracle") {
  ProbVector p = make_pv({0.5, 0.25, 0.25});
  CHECK(smooth_h_min(p, Epsilon(0.0)).value_bits == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(oracle_min(p, 0.25) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(smooth_h_min(p, Epsilon(0.25)).value_bits == doctest::Approx(2.0).epsilon(1e-9));

  ProbVector u4 = zoo::uniform(4, "x");
  CHECK(oracle_min(u4, 0.5) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(smooth_h_min(u4, Epsilon(0.5)).value_bits == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("smoothed max-entropy by atom deletion, checked against the oracle") {
  ProbVector p = make_pv({0.9, 0.05, 0.05});
  CHECK(smooth_h_max(p, Epsilon(0.0)).value_bits ==
        doctest::Approx(std::log2(3.0)).epsilon(1e-12));

  CHECK(oracle_max(p, 0.05) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(smooth_h_max(p, Epsilon(0.05)).value_bits == doctest::Approx(1.0).epsilon(1e-9));

  CHECK(oracle_max(p, 0.1) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(smooth_h_max(p, Epsilon(0.1)).value_bits == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("smoothed conditional min-entropy") {
  CHECK(smooth_h_min_cond(zoo::equal(2), Epsilon(0.0)).value_bits == doctest::Approx(0.0));
  JointDistribution prod = zoo::product(zoo::uniform(2, "x"), zoo::uniform(2, "y"));
  CHECK(smooth_h_min_cond(prod, Epsilon(0.0)).value_bits == doctest::Approx(1.0));

  // Capping both columns at 0.8 removes exactly 0.1 of joint mass.
  SmoothingReport r = smooth_h_min_cond(bsc_joint(0.1), Epsilon(0.1));
  CHECK(r.value_bits == doctest::Approx(-std::log2(0.8)).epsilon(1e-9));
  double ex = oracle::exact_smooth_entropy(bsc_joint(0.1), Epsilon(0.1),
                                           oracle::EntropyKind::kMin,
                                           oracle::Formulation::kEvent);
  CHECK(r.value_bits == doctest::Approx(ex).epsilon(1e-9));
}

TEST_CASE("smoothed conditional max-entropy") {
  CHECK(smooth_h_max_cond(zoo::equal(2), Epsilon(0.0)).value_bits == doctest::Approx(0.0));
  CHECK(smooth_h_max_cond(bsc_joint(0.1), Epsilon(0.0)).value_bits == doctest::Approx(1.0));

  SmoothingReport r = smooth_h_max_cond(bsc_joint(0.1), Epsilon(0.2));
  CHECK(r.value_bits == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r.removed_mass == doctest::Approx(0.1).epsilon(1e-12));
  double ex = oracle::exact_smooth_entropy(bsc_joint(0.1), Epsilon(0.2),
                                           oracle::EntropyKind::kMax,
                                           oracle::Formulation::kEvent);
  CHECK(r.value_bits == doctest::Approx(ex).epsilon(1e-9));
}

TEST_CASE("smoothing report invariants on random instances") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + rng() % 9;
    std::vector<double> mass(n);
    double total = 0.0;
    for (double& m : mass) {
      m = -std::log1p(-uniform_double(rng));
      total += m;
    }
    for (double& m : mass) m /= total;
    ProbVector p = make_pv(mass);
    double e = 0.7 * uniform_double(rng);

    SmoothingReport mn = smooth_h_min(p, Epsilon(e));
    CHECK(mn.removed_mass <= e + 1e-12);
    CHECK(reevaluate_witness_min(mn) == doctest::Approx(mn.value_bits).epsilon(1e-9));
    const auto& wit = std::get<SubProbVector>(mn.witness);
    for (std::size_t i = 0; i < n; ++i) CHECK(wit.mass[i] <= p.mass[i] + 1e-15);

    SmoothingReport mx = smooth_h_max(p, Epsilon(e));
    CHECK(mx.removed_mass <= e + 1e-12);
    CHECK(reevaluate_witness_max(mx) == doctest::Approx(mx.value_bits).epsilon(1e-9));
  }
}

TEST_CASE("conditional smoothing reports reproduce their values") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t nx = 2 + rng() % 3, ny = 2 + rng() % 3;
    JointDistribution j = zoo::random_joint(nx, ny, 2 + rng() % (nx * ny - 1), rng());
    double e = 0.6 * uniform_double(rng);

    SmoothingReport mn = smooth_h_min_cond(j, Epsilon(e));
    CHECK(mn.removed_mass <= e + 1e-12);
    CHECK(reevaluate_witness_min(mn) == doctest::Approx(mn.value_bits).epsilon(1e-9));

    SmoothingReport mx = smooth_h_max_cond(j, Epsilon(e));
    CHECK(mx.removed_mass <= e + 1e-12);
    CHECK(reevaluate_witness_max(mx) == doctest::Approx(mx.value_bits).epsilon(1e-9));
  }
}

TEST_CASE("monotonicity in the smoothing budget and zero-budget recovery") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 2 + rng() % 7;
    std::vector<double> mass(n);
    double total = 0.0;
    for (double& m : mass) {
      m = -std::log1p(-uniform_double(rng));
      total += m;
    }
    for (double& m : mass) m /= total;
    ProbVector p = make_pv(mass);
    double e1 = 0.5 * uniform_double(rng);
    double e2 = e1 + (0.99 - e1) * uniform_double(rng) * 0.5;

    CHECK(smooth_h_min(p, Epsilon(e1)).value_bits <=
          smooth_h_min(p, Epsilon(e2)).value_bits + 1e-12);
    CHECK(smooth_h_max(p, Epsilon(e1)).value_bits >=
          smooth_h_max(p, Epsilon(e2)).value_bits - 1e-12);

    CHECK(smooth_h_min(p, Epsilon(0.0)).value_bits == doctest::Approx(h_min(p)).epsilon(1e-12));
    CHECK(smooth_h_max(p, Epsilon(0.0)).value_bits == doctest::Approx(h_max(p)).epsilon(1e-12));
    CHECK(h_min(p) <= shannon_entropy(p) + 1e-12);
    CHECK(shannon_entropy(p) <= h_max(p) + 1e-12);
  }

  for (int trial = 0; trial < 200; ++trial) {
    std::size_t nx = 2 + rng() % 3, ny = 2 + rng() % 3;
    JointDistribution j = zoo::random_joint(nx, ny, 2 + rng() % (nx * ny - 1), rng());
    double e1 = 0.4 * uniform_double(rng);
    double e2 = e1 + 0.2 * uniform_double(rng);
    CHECK(smooth_h_min_cond(j, Epsilon(e1)).value_bits <=
          smooth_h_min_cond(j, Epsilon(e2)).value_bits + 1e-12);
    CHECK(smooth_h_max_cond(j, Epsilon(e1)).value_bits >=
          smooth_h_max_cond(j, Epsilon(e2)).value_bits - 1e-12);
    CHECK(smooth_h_min_cond(j, Epsilon(0.0)).value_bits ==
          doctest::Approx(h_min_cond(j)).epsilon(1e-12));
    CHECK(smooth_h_max_cond(j, Epsilon(0.0)).value_bits ==
          doctest::Approx(h_max_cond(j)).epsilon(1e-12));
  }
}
