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

#include "oneshot/io.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "json.hpp"
#include "oneshot/zoo.hpp"

namespace oneshot {
namespace {

using nlohmann::json;

constexpr const char* kErasureWire = "erasure";

std::string label_to_wire(const std::string& l) {
  return l == zoo::kErasureLabel ? kErasureWire : l;
}

std::string label_from_wire(const std::string& l) {
  return l == kErasureWire ? zoo::kErasureLabel : l;
}

std::vector<std::string> labels_from_wire(const json& a, const char* what) {
  if (!a.is_array()) throw_error(ErrorKind::kInvalidParameter, std::string(what) + " must be an array");
  std::vector<std::string> out;
  out.reserve(a.size());
  for (const auto& v : a) {
    if (!v.is_string()) throw_error(ErrorKind::kInvalidParameter, std::string(what) + " entries must be strings");
    out.push_back(label_from_wire(v.get<std::string>()));
  }
  return out;
}

std::vector<double> numbers(const json& a, const char* what) {
  if (!a.is_array()) throw_error(ErrorKind::kInvalidParameter, std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(a.size());
  for (const auto& v : a) {
    if (!v.is_number()) throw_error(ErrorKind::kInvalidParameter, std::string(what) + " entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw_error(ErrorKind::kInvalidParameter, "malformed JSON document");
  }
  return doc;
}

void matrix_from_json(const json& doc, LabeledMatrix* m, const char* what) {
  if (!doc.contains("x_labels") || !doc.contains("y_labels") || !doc.contains("matrix")) {
    throw_error(ErrorKind::kInvalidParameter,
                std::string(what) + " needs x_labels, y_labels and matrix");
  }
  m->x_labels = labels_from_wire(doc["x_labels"], "x_labels");
  m->y_labels = labels_from_wire(doc["y_labels"], "y_labels");
  const json& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != m->x_labels.size()) {
    throw_error(ErrorKind::kInvalidParameter, "matrix row count does not match x_labels");
  }
  m->values.clear();
  for (const auto& row : rows) {
    std::vector<double> r = numbers(row, "matrix row");
    if (r.size() != m->y_labels.size()) {
      throw_error(ErrorKind::kInvalidParameter, "matrix column count does not match y_labels");
    }
    m->values.insert(m->values.end(), r.begin(), r.end());
  }
}

void escape_into(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
  std::get<Object>(value_).emplace_back(key, std::move(v));
  return *this;
}

JsonValue& JsonValue::push(JsonValue v) {
  std::get<Array>(value_).push_back(std::move(v));
  return *this;
}

void JsonValue::render(std::string& out, int indent, bool pretty) const {
  auto pad = [&](int n) {
    if (pretty) {
      out += '\n';
      out.append(static_cast<std::size_t>(2 * n), ' ');
    }
  };
  if (std::holds_alternative<std::nullptr_t>(value_)) {
    out += "null";
  } else if (const bool* b = std::get_if<bool>(&value_)) {
    out += *b ? "true" : "false";
  } else if (const double* d = std::get_if<double>(&value_)) {
    out += format_double(*d);
  } else if (const std::int64_t* i = std::get_if<std::int64_t>(&value_)) {
    out += std::to_string(*i);
  } else if (const std::string* s = std::get_if<std::string>(&value_)) {
    escape_into(out, *s);
  } else if (const Array* a = std::get_if<Array>(&value_)) {
    out += '[';
    for (std::size_t i = 0; i < a->size(); ++i) {
      if (i) out += pretty ? ", " : ",";
      (*a)[i].render(out, indent, false);
    }
    out += ']';
  } else {
    const Object& o = std::get<Object>(value_);
    out += '{';
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (i) out += ',';
      pad(indent + 1);
      escape_into(out, o[i].first);
      out += pretty ? ": " : ":";
      o[i].second.render(out, indent + 1, pretty);
    }
    if (!o.empty()) pad(indent);
    out += '}';
  }
}

std::string JsonValue::dump() const {
  std::string out;
  render(out, 0, false);
  return out;
}

std::string JsonValue::pretty() const {
  std::string out;
  render(out, 0, true);
  return out;
}

JsonValue to_json(const ProbVector& p) {
  JsonValue labels = JsonValue::array();
  JsonValue mass = JsonValue::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    labels.push(label_to_wire(p.labels[i]));
    mass.push(p.mass[i]);
  }
  JsonValue v = JsonValue::object();
  v.set("labels", std::move(labels));
  v.set("mass", std::move(mass));
  return v;
}

JsonValue to_json(const SubProbVector& p) {
  JsonValue labels = JsonValue::array();
  JsonValue mass = JsonValue::array();
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    labels.push(label_to_wire(p.labels[i]));
    mass.push(p.mass[i]);
  }
  JsonValue v = JsonValue::object();
  v.set("labels", std::move(labels));
  v.set("mass", std::move(mass));
  return v;
}

namespace {

JsonValue matrix_to_json(const LabeledMatrix& m, bool row_stochastic) {
  JsonValue xs = JsonValue::array();
  for (const auto& l : m.x_labels) xs.push(label_to_wire(l));
  JsonValue ys = JsonValue::array();
  for (const auto& l : m.y_labels) ys.push(label_to_wire(l));
  JsonValue rows = JsonValue::array();
  for (std::size_t x = 0; x < m.nx(); ++x) {
    JsonValue row = JsonValue::array();
    for (std::size_t y = 0; y < m.ny(); ++y) row.push(m.at(x, y));
    rows.push(std::move(row));
  }
  JsonValue v = JsonValue::object();
  v.set("x_labels", std::move(xs));
  v.set("y_labels", std::move(ys));
  v.set("matrix", std::move(rows));
  if (row_stochastic) v.set("row_stochastic", true);
  return v;
}

}  // namespace

JsonValue to_json(const JointDistribution& j) { return matrix_to_json(j, false); }
JsonValue to_json(const Channel& w) { return matrix_to_json(w, true); }

ProbVector prob_vector_from_json(const std::string& text) {
  json doc = parse(text);
  if (!doc.contains("labels") || !doc.contains("mass")) {
    throw_error(ErrorKind::kInvalidParameter, "distribution needs labels and mass");
  }
  ProbVector p;
  p.labels = labels_from_wire(doc["labels"], "labels");
  p.mass = numbers(doc["mass"], "mass");
  return p;
}

JointDistribution joint_from_json(const std::string& text) {
  JointDistribution j;
  matrix_from_json(parse(text), &j, "joint");
  return j;
}

Channel channel_from_json(const std::string& text) {
  Channel w;
  matrix_from_json(parse(text), &w, "channel");
  return w;
}

DocKind detect_kind(const std::string& text) {
  json doc = parse(text);
  if (doc.contains("mass")) return DocKind::kProbVector;
  if (doc.contains("matrix")) {
    if (doc.contains("row_stochastic") && doc["row_stochastic"].is_boolean() &&
        doc["row_stochastic"].get<bool>()) {
      return DocKind::kChannel;
    }
    return DocKind::kJoint;
  }
  throw_error(ErrorKind::kInvalidParameter, "unrecognized document shape");
}

namespace {

std::string matrix_to_csv(const LabeledMatrix& m) {
  std::string out;
  for (const auto& l : m.y_labels) {
    out += ',';
    out += label_to_wire(l);
  }
  out += '\n';
  for (std::size_t x = 0; x < m.nx(); ++x) {
    out += label_to_wire(m.x_labels[x]);
    for (std::size_t y = 0; y < m.ny(); ++y) {
      out += ',';
      out += format_double(m.at(x, y));
    }
    out += '\n';
  }
  return out;
}

void flatten_json(const JsonValue& v, const std::string& path, std::string& out);

}  // namespace

std::string to_csv(const JointDistribution& j) { return matrix_to_csv(j); }
std::string to_csv(const Channel& w) { return matrix_to_csv(w); }

std::string to_csv(const ProbVector& p) {
  std::string header, row;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) {
      header += ',';
      row += ',';
    }
    header += label_to_wire(p.labels[i]);
    row += format_double(p.mass[i]);
  }
  return header + "\n" + row + "\n";
}

namespace {

void flatten_json(const JsonValue& v, const std::string& path, std::string& out) {
  // Re-parse the compact rendering: cheap and keeps the walker independent
  // of JsonValue internals.
  json doc = json::parse(v.dump());
  std::function<void(const json&, const std::string&)> walk =
      [&](const json& node, const std::string& p) {
        if (node.is_object()) {
          for (auto it = node.begin(); it != node.end(); ++it) {
            walk(it.value(), p.empty() ? it.key() : p + "." + it.key());
          }
        } else if (node.is_array()) {
          for (std::size_t i = 0; i < node.size(); ++i) {
            walk(node[i], p + "[" + std::to_string(i) + "]");
          }
        } else {
          out += p;
          out += ',';
          if (node.is_string()) {
            out += node.get<std::string>();
          } else {
            out += node.dump();
          }
          out += '\n';
        }
      };
  walk(doc, path);
}

}  // namespace

std::string json_to_csv(const JsonValue& v) {
  std::string out = "key,value\n";
  flatten_json(v, "", out);
  return out;
}

}  // namespace oneshot
