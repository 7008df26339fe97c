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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oneshot/common_info.hpp"
#include "oneshot/oracle.hpp"
#include "oneshot/smooth_entropy.hpp"
#include "oneshot/util.hpp"
#include "oneshot/zoo.hpp"

using namespace oneshot;

namespace {

JointDistribution relabeled(const JointDistribution& j, std::mt19937_64& rng) {
  JointDistribution out = j;
  std::vector<std::size_t> px(j.nx()), py(j.ny());
  for (std::size_t i = 0; i < px.size(); ++i) px[i] = i;
  for (std::size_t i = 0; i < py.size(); ++i) py[i] = i;
  std::shuffle(px.begin(), px.end(), rng);
  std::shuffle(py.begin(), py.end(), rng);
  for (std::size_t x = 0; x < j.nx(); ++x) {
    out.x_labels[px[x]] = j.x_labels[x];
    for (std::size_t y = 0; y < j.ny(); ++y) out.at(px[x], py[y]) = j.at(x, y);
  }
  for (std::size_t y = 0; y < j.ny(); ++y) out.y_labels[py[y]] = j.y_labels[y];
  return out;
}

}  // namespace

TEST_CASE("connected components of the support graph") {
  CommonPartition diag = gacs_korner(zoo::equal(2));
  CHECK(diag.size() == 2);
  CHECK(diag.block_mass[0] == doctest::Approx(0.5));
  CHECK(diag.block_mass[1] == doctest::Approx(0.5));

  CommonPartition one =
      gacs_korner(zoo::product(zoo::uniform(3, "x"), zoo::uniform(2, "y")));
  CHECK(one.size() == 1);
  CHECK(one.block_mass[0] == doctest::Approx(1.0));

  CommonPartition two = gacs_korner(zoo::blocks({0.5, 0.5}, {{2, 2}, {2, 2}}));
  CHECK(two.size() == 2);
  CHECK(two.block_mass[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(two.block_mass[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("block masses are invariant under relabeling") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t nx = 2 + rng() % 3, ny = 2 + rng() % 3;
    JointDistribution j = zoo::random_joint(nx, ny, 2 + rng() % (nx * ny - 1), rng());
    std::vector<double> a = gacs_korner(j).block_mass;
    std::vector<double> b = gacs_korner(relabeled(j, rng)).block_mass;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("entropies of the common part") {
  CommonPartition two = gacs_korner(zoo::equal(2));
  CHECK(common_entropy(two) == doctest::Approx(1.0));
  CHECK(common_min_entropy(two) == doctest::Approx(1.0));

  CommonPartition one = gacs_korner(zoo::product(zoo::uniform(2, "x"), zoo::uniform(2, "y")));
  CHECK(common_entropy(one) == doctest::Approx(0.0));
  CHECK(common_min_entropy(one) == doctest::Approx(0.0));

  CommonPartition three = gacs_korner(zoo::blocks({0.5, 0.25, 0.25}, {{1, 1}, {1, 1}, {1, 1}}));
  CHECK(common_entropy(three) == doctest::Approx(1.5));
  CHECK(common_min_entropy(three) == doctest::Approx(1.0));
}

TEST_CASE("greedy lower bound on the smoothed common-part min-entropy") {
  CHECK(c_min_lower(zoo::equal(2), Epsilon(0.0)).lower_bits == doctest::Approx(1.0));

  // The complete 2x2 support graph cannot be disconnected for 0.25.
  JointDistribution prod = zoo::product(zoo::uniform(2, "x"), zoo::uniform(2, "y"));
  CHECK(oracle::exact_c_min(prod, Epsilon(0.25)) == doctest::Approx(0.0));
  CHECK(c_min_lower(prod, Epsilon(0.25)).lower_bits == doctest::Approx(0.0));

  // Rebalancing two rectangles costs exactly the mass moved between them.
  JointDistribution two = zoo::blocks({0.6, 0.4}, {{2, 2}, {2, 2}});
  CHECK(oracle::exact_c_min(two, Epsilon(0.1)) == doctest::Approx(1.0).epsilon(1e-9));
  CminResult r = c_min_lower(two, Epsilon(0.1));
  CHECK(r.lower_bits == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.perturbation_mass <= 0.1 + 1e-12);
  CHECK_NOTHROW(validate(r.perturbed_joint));
}

TEST_CASE("witness joints stay within budget and realize the reported value") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t nx = 2 + rng() % 3, ny = 2 + rng() % 3;
    JointDistribution j = zoo::random_joint(nx, ny, 2 + rng() % (nx * ny - 1), rng());
    double e = 0.5 * uniform_double(rng);
    CminResult r = c_min_lower(j, Epsilon(e));
    CHECK(r.perturbation_mass <= e + 1e-12);
    CHECK_NOTHROW(validate(r.perturbed_joint));
    CHECK(common_min_entropy(gacs_korner(r.perturbed_joint)) ==
          doctest::Approx(r.lower_bits).epsilon(1e-9));
  }
}

TEST_CASE("zero budget reproduces the unsmoothed value exactly") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t nx = 2 + rng() % 3, ny = 2 + rng() % 3;
    JointDistribution j = zoo::random_joint(nx, ny, 2 + rng() % (nx * ny - 1), rng());
    CHECK(c_min_lower(j, Epsilon(0.0)).lower_bits ==
          common_min_entropy(gacs_korner(j)));
  }
}

TEST_CASE("lower bound is monotone in the budget") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t nx = 2 + rng() % 3, ny = 2 + rng() % 3;
    JointDistribution j = zoo::random_joint(nx, ny, 2 + rng() % (nx * ny - 1), rng());
    double e1 = 0.5 * uniform_double(rng);
    double e2 = e1 + 0.3 * uniform_double(rng);
    CHECK(c_min_lower(j, Epsilon(e1)).lower_bits <=
          c_min_lower(j, Epsilon(e2)).lower_bits + 1e-12);
  }
}

TEST_CASE("upper bound plug-ins") {
  // X = Y uniform bit: 1 - 0 + log2(2) = 2.
  CHECK(c_min_upper(zoo::equal(2), Epsilon(0.0), Epsilon(0.5), Epsilon(0.0)) ==
        doctest::Approx(2.0).epsilon(1e-9));
  // Independent bits: 1 - 1 + log2(4) = 2, loose above the true value 0.
  JointDistribution prod = zoo::product(zoo::uniform(2, "x"), zoo::uniform(2, "y"));
  CHECK(c_min_upper(prod, Epsilon(0.0), Epsilon(0.25), Epsilon(0.0)) ==
        doctest::Approx(2.0).epsilon(1e-9));
  // X = Y uniform over four: 2 - 0 + 1 = 3.
  CHECK(c_min_upper(zoo::equal(4), Epsilon(0.0), Epsilon(0.5), Epsilon(0.0)) ==
        doctest::Approx(3.0).epsilon(1e-9));

  CHECK_THROWS_AS(c_min_upper(zoo::equal(2), Epsilon(0.3), Epsilon(0.0), Epsilon(0.0)),
                  Error);
  CHECK_THROWS_AS(c_min_upper(zoo::equal(2), Epsilon(0.4), Epsilon(0.3), Epsilon(0.0)),
                  Error);
}

TEST_CASE("extractable-randomness bracket") {
  // Uniform over 16 on the diagonal: lower = 4 - 2 log2(4) = 0.
  CminResult big = c_min_lower(zoo::equal(16), Epsilon(0.25));
  CHECK(big.lower_bits == doctest::Approx(4.0).epsilon(1e-9));
  ExtBounds b16 = c_ext_bounds(zoo::equal(16), Epsilon(0.5), Epsilon(0.25));
  CHECK(b16.lower_bits == doctest::Approx(0.0).epsilon(1e-9));

  JointDistribution prod = zoo::product(zoo::uniform(2, "x"), zoo::uniform(2, "y"));
  CHECK(c_ext_bounds(prod, Epsilon(0.1), Epsilon(0.0)).lower_bits == doctest::Approx(0.0));

  ExtBounds bit = c_ext_bounds(zoo::equal(2), Epsilon(0.75), Epsilon(0.5));
  CHECK(bit.lower_bits == doctest::Approx(0.0));
  REQUIRE(bit.upper_bits.has_value());
  CHECK(*bit.upper_bits >= 1.0 - 1e-9);

  CHECK_THROWS_AS(c_ext_bounds(prod, Epsilon(0.1), Epsilon(0.2)), Error);
}

TEST_CASE("merging side-information symbols never creates common structure") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t nx = 2 + rng() % 3, ny = 3;
    JointDistribution j = zoo::random_joint(nx, ny, 2 + rng() % (nx * ny - 1), rng());
    JointDistribution merged;
    merged.x_labels = j.x_labels;
    merged.y_labels = {"m", j.y_labels[2]};
    merged.values.assign(nx * 2, 0.0);
    for (std::size_t x = 0; x < nx; ++x) {
      merged.at(x, 0) = j.at(x, 0) + j.at(x, 1);
      merged.at(x, 1) = j.at(x, 2);
    }
    CHECK(common_entropy(gacs_korner(merged)) <=
          common_entropy(gacs_korner(j)) + 1e-9);
  }
}

TEST_CASE("sandwich against the exact enumeration on random tiny joints") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t nx = 2 + rng() % 3, ny = 2 + rng() % 3;
    std::size_t cap = std::min<std::size_t>(nx * ny, 12);
    JointDistribution j = zoo::random_joint(nx, ny, 2 + rng() % (cap - 1), rng());
    for (double e : {0.0, 0.1, 0.25}) {
      double exact = oracle::exact_c_min(j, Epsilon(e));
      CHECK(c_min_lower(j, Epsilon(e)).lower_bits <= exact + 1e-9);
      if (0.25 + 2.0 * e < 1.0) {
        CHECK(exact <= c_min_upper(j, Epsilon(e), Epsilon(0.25), Epsilon(0.0)) + 1e-9);
      }
    }
  }
}
