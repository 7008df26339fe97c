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

#include <random>

#include "doctest.h"
#include "oneshot/io.hpp"
#include "oneshot/zoo.hpp"

using namespace oneshot;

TEST_CASE("channel generators") {
  Channel id = zoo::identity(3);
  CHECK(id.at(0, 0) == 1.0);
  CHECK(id.at(0, 1) == 0.0);

  Channel b = zoo::bsc(0.1);
  CHECK(b.at(0, 0) == doctest::Approx(0.9));
  CHECK(b.at(1, 0) == doctest::Approx(0.1));

  Channel e = zoo::bec(0.2);
  CHECK(e.ny() == 3);
  CHECK(e.at(0, 1) == doctest::Approx(0.2));
  CHECK(e.at(1, 1) == doctest::Approx(0.2));
  CHECK(e.y_labels[1] == zoo::kErasureLabel);

  Channel z = zoo::zchannel(0.2);
  CHECK(z.at(0, 0) == 1.0);
  CHECK(z.at(1, 0) == doctest::Approx(0.2));

  CHECK_THROWS_AS(zoo::bsc(1.5), Error);
  CHECK_THROWS_AS(zoo::identity(0), Error);
}

TEST_CASE("every generator output validates") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 50; ++i) {
    CHECK_NOTHROW(validate(zoo::random_channel(1 + rng() % 6, 1 + rng() % 6, rng())));
    std::size_t nx = 1 + rng() % 5, ny = 1 + rng() % 5;
    CHECK_NOTHROW(validate(zoo::random_joint(nx, ny, 1 + rng() % (nx * ny), rng())));
  }
  CHECK_NOTHROW(validate(zoo::equal(4)));
  CHECK_NOTHROW(validate(zoo::blocks({0.5, 0.5}, {{2, 2}, {2, 2}})));
  for (const auto& [name, j] : zoo::tiny_joint_corpus()) CHECK_NOTHROW(validate(j));
  for (const auto& [name, w] : zoo::tiny_channel_corpus()) CHECK_NOTHROW(validate(w));
}

TEST_CASE("seeded generators replay bit for bit") {
  Channel a = zoo::random_channel(4, 5, 99);
  Channel b = zoo::random_channel(4, 5, 99);
  CHECK(a.values == b.values);
  Channel c = zoo::random_channel(4, 5, 100);
  CHECK(a.values != c.values);
}

TEST_CASE("json round trips") {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 30; ++i) {
    Channel w = zoo::random_channel(2 + rng() % 3, 2 + rng() % 3, rng());
    Channel back = channel_from_json(to_json(w).dump());
    CHECK(back.x_labels == w.x_labels);
    CHECK(back.y_labels == w.y_labels);
    for (std::size_t k = 0; k < w.values.size(); ++k) {
      CHECK(back.values[k] == doctest::Approx(w.values[k]).epsilon(1e-11));
    }

    std::size_t nx = 2 + rng() % 3, ny = 2 + rng() % 3;
    JointDistribution j = zoo::random_joint(nx, ny, 2 + rng() % (nx * ny - 1), rng());
    JointDistribution jback = joint_from_json(to_json(j).dump());
    CHECK(jback.values.size() == j.values.size());
  }
}

TEST_CASE("document kinds and the erasure wire name") {
  Channel e = zoo::bec(0.2);
  std::string wire = to_json(e).dump();
  CHECK(wire.find("erasure") != std::string::npos);
  CHECK(wire.find("row_stochastic") != std::string::npos);
  CHECK(detect_kind(wire) == DocKind::kChannel);

  Channel back = channel_from_json(wire);
  CHECK(back.y_labels[1] == zoo::kErasureLabel);

  CHECK(detect_kind(to_json(zoo::equal(2)).dump()) == DocKind::kJoint);
  CHECK(detect_kind(to_json(zoo::uniform(3, "x")).dump()) == DocKind::kProbVector);
  CHECK_THROWS_AS(detect_kind("{\"foo\": 1}"), Error);
  CHECK_THROWS_AS(channel_from_json("not json"), Error);
}

TEST_CASE("csv mirrors the matrix") {
  std::string csv = to_csv(zoo::bsc(0.25));
  CHECK(csv == ",y0,y1\nx0,0.75,0.25\nx1,0.25,0.75\n");
  std::string pv = to_csv(zoo::uniform(2, "x"));
  CHECK(pv == "x0,x1\n0.5,0.5\n");
}

TEST_CASE("twelve significant digits in rendered numbers") {
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
  CHECK(format_double(3.0) == "3");
  JsonValue v = JsonValue::object();
  v.set("value_bits", 2.0);
  v.set("note", "ok");
  CHECK(v.dump() == "{\"value_bits\":2,\"note\":\"ok\"}");
}
