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
#include "oneshot/zoo.hpp"

using namespace oneshot;
using namespace oneshot::oracle;

namespace {

ProbVector make_pv(std::vector<double> mass) {
  ProbVector p;
  for (std::size_t i = 0; i < mass.size(); ++i) p.labels.push_back("x" + std::to_string(i));
  p.mass = std::move(mass);
  return p;
}

}  // namespace

TEST_CASE("exhaustive one-shot capacity") {
  CHECK(exact_one_shot_capacity(zoo::identity(4), Epsilon(0.0)) == doctest::Approx(2.0));
  CHECK(exact_one_shot_capacity(zoo::bsc(0.3), Epsilon(0.1)) == doctest::Approx(0.0));
  CHECK(exact_one_shot_capacity(zoo::bec(0.2), Epsilon(0.2)) == doctest::Approx(1.0));

  OracleBudget tight;
  tight.max_outputs = 2;
  CHECK_THROWS_AS(exact_one_shot_capacity(zoo::bec(0.2), Epsilon(0.2), tight), Error);
}

TEST_CASE("enumeration smoothing agrees with the stated values") {
  CHECK(exact_smooth_entropy(make_pv({0.5, 0.25, 0.25}), Epsilon(0.25), EntropyKind::kMin,
                             Formulation::kEvent) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(exact_smooth_entropy(make_pv({0.9, 0.05, 0.05}), Epsilon(0.05), EntropyKind::kMax,
                             Formulation::kEvent) == doctest::Approx(1.0).epsilon(1e-9));

  ProbVector p = make_pv({0.4, 0.35, 0.15, 0.1});
  for (auto f : {Formulation::kEvent, Formulation::kCoupling}) {
    CHECK(exact_smooth_entropy(p, Epsilon(0.0), EntropyKind::kMin, f) ==
          doctest::Approx(h_min(p)).epsilon(1e-12));
    CHECK(exact_smooth_entropy(p, Epsilon(0.0), EntropyKind::kMax, f) ==
          doctest::Approx(h_max(p)).epsilon(1e-12));
  }

  OracleBudget b;
  CHECK_THROWS_AS(exact_smooth_entropy(zoo::uniform(13, "x"), Epsilon(0.1),
                                       EntropyKind::kMin, Formulation::kEvent, b),
                  Error);
}

TEST_CASE("normalization floors the coupling min-entropy at uniform") {
  // Keeping the vector normalized caps the smoothed value at log |alphabet|,
  // unlike the event form which may discard mass outright.
  ProbVector u4 = zoo::uniform(4, "x");
  CHECK(exact_smooth_entropy(u4, Epsilon(0.5), EntropyKind::kMin, Formulation::kEvent) ==
        doctest::Approx(3.0).epsilon(1e-9));
  CHECK(exact_smooth_entropy(u4, Epsilon(0.5), EntropyKind::kMin, Formulation::kCoupling) ==
        doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("exact smoothed common-part min-entropy") {
  CHECK(exact_c_min(zoo::equal(2), Epsilon(0.0)) == doctest::Approx(1.0));
  CHECK(exact_c_min(zoo::product(zoo::uniform(2, "x"), zoo::uniform(2, "y")),
                    Epsilon(0.25)) == doctest::Approx(0.0));
  CHECK(exact_c_min(zoo::blocks({0.6, 0.4}, {{2, 2}, {2, 2}}), Epsilon(0.1)) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("exact extractable common randomness") {
  CHECK(exact_c_ext(zoo::equal(2), Epsilon(0.0)) == doctest::Approx(1.0));
  CHECK(exact_c_ext(zoo::product(zoo::uniform(2, "x"), zoo::uniform(2, "y")),
                    Epsilon(0.0)) == doctest::Approx(0.0));
  CHECK(exact_c_ext(zoo::equal(4), Epsilon(0.0)) == doctest::Approx(2.0));

  CHECK_THROWS_AS(exact_c_ext(zoo::equal(5), Epsilon(0.0)), Error);
}

TEST_CASE("uniform peeling reconstructs the input exactly") {
  auto check_decomposition = [](const ProbVector& p) {
    auto parts = uniform_decomposition(p);
    double level = std::exp2(-h_min(p));
    double total_weight = 0.0;
    std::vector<double> rebuilt(p.size(), 0.0);
    for (const auto& [weight, comp] : parts) {
      CHECK(weight > 0.0);
      total_weight += weight;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (comp.mass[i] != 0.0) {
          CHECK(comp.mass[i] == doctest::Approx(level).epsilon(1e-12));
        }
        rebuilt[i] += weight * comp.mass[i];
      }
    }
    CHECK(total_weight == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(rebuilt[i] == doctest::Approx(p.mass[i]).epsilon(1e-12));
    }
  };

  auto one = uniform_decomposition(zoo::uniform(4, "x"));
  CHECK(one.size() == 1);
  CHECK(one[0].first == doctest::Approx(1.0));

  auto point = uniform_decomposition(make_pv({1.0}));
  CHECK(point.size() == 1);
  CHECK(point[0].second.mass[0] == doctest::Approx(1.0));

  auto skew = uniform_decomposition(make_pv({0.5, 0.25, 0.25}));
  CHECK(skew.size() == 2);
  CHECK(skew[0].first == doctest::Approx(0.5));

  check_decomposition(make_pv({0.5, 0.25, 0.25}));
  check_decomposition(make_pv({0.4, 0.35, 0.15, 0.1}));
  check_decomposition(make_pv({0.5, 0.3, 0.2}));

  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 3 + rng() % 6;
    JointDistribution j = zoo::random_joint(1, n, n, rng());
    ProbVector p = marginal_y(j);
    check_decomposition(p);
  }
}

TEST_CASE("budget refusal paths") {
  OracleBudget b;
  b.max_support_atoms = 4;
  CHECK_THROWS_AS(exact_c_min(zoo::equal(5), Epsilon(0.1), b), Error);
  b.max_support_atoms = 12;
  b.time_limit_seconds = 0.0;
  CHECK_THROWS_AS(exact_one_shot_capacity(zoo::identity(4), Epsilon(0.0), b), Error);
}
