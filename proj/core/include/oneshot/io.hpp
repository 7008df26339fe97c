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

#ifndef ONESHOT_IO_HPP_
#define ONESHOT_IO_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "oneshot/prob.hpp"

namespace oneshot {

// Minimal ordered JSON value. Output is rendered with %.12g for numbers and
// preserves insertion order, so serialized reports are reproducible byte for
// byte. Parsing of input documents is delegated to a full JSON parser in
// io.cpp; this type only carries structured output.
class JsonValue {
 public:
  using Array = std::vector<JsonValue>;
  using Member = std::pair<std::string, JsonValue>;
  using Object = std::vector<Member>;

  JsonValue() : value_(nullptr) {}
  JsonValue(std::nullptr_t) : value_(nullptr) {}
  JsonValue(bool b) : value_(b) {}
  JsonValue(double d) : value_(d) {}
  JsonValue(int i) : value_(static_cast<std::int64_t>(i)) {}
  JsonValue(std::int64_t i) : value_(i) {}
  JsonValue(std::uint64_t u) : value_(static_cast<std::int64_t>(u)) {}
  JsonValue(const char* s) : value_(std::string(s)) {}
  JsonValue(std::string s) : value_(std::move(s)) {}
  JsonValue(Array a) : value_(std::move(a)) {}

  static JsonValue object() {
    JsonValue v;
    v.value_ = Object{};
    return v;
  }
  static JsonValue array() {
    JsonValue v;
    v.value_ = Array{};
    return v;
  }

  JsonValue& set(const std::string& key, JsonValue v);
  JsonValue& push(JsonValue v);

  std::string dump() const;  // compact
  std::string pretty() const;

 private:
  void render(std::string& out, int indent, bool pretty) const;
  std::variant<std::nullptr_t, bool, double, std::int64_t, std::string, Array, Object>
      value_;
};

// Formats a double with 12 significant digits, the precision used for all
// floating-point output. Non-finite values render as null.
std::string format_double(double v);

// JSON codecs for the wire types.
//
//   ProbVector        {"labels": [...], "mass": [...]}
//   JointDistribution {"x_labels": [...], "y_labels": [...], "matrix": [[...]]}
//   Channel           same as a joint plus "row_stochastic": true
//
// The erasure symbol is stored as the string "erasure" on the wire.
JsonValue to_json(const ProbVector& p);
JsonValue to_json(const SubProbVector& p);
JsonValue to_json(const JointDistribution& j);
JsonValue to_json(const Channel& w);

ProbVector prob_vector_from_json(const std::string& text);
JointDistribution joint_from_json(const std::string& text);
Channel channel_from_json(const std::string& text);

// Kind detection for documents arriving on stdin.
enum class DocKind { kProbVector, kJoint, kChannel };
DocKind detect_kind(const std::string& text);

// CSV mirrors of the matrix types: header row of y labels, one row per x.
std::string to_csv(const JointDistribution& j);
std::string to_csv(const Channel& w);
std::string to_csv(const ProbVector& p);

// Generic key,value CSV rendering of a (flat or nested) JSON report.
std::string json_to_csv(const JsonValue& v);

}  // namespace oneshot

#endif  // ONESHOT_IO_HPP_
