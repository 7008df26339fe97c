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

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "oneshot/capacity.hpp"
#include "oneshot/common_info.hpp"
#include "oneshot/io.hpp"
#include "oneshot/oracle.hpp"
#include "oneshot/smooth_entropy.hpp"
#include "oneshot/tasks.hpp"
#include "oneshot/verify.hpp"
#include "oneshot/zoo.hpp"

namespace {

using namespace oneshot;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kBudgetExceeded:
      return 4;
    default:
      return 3;  // validation and input errors
  }
}

std::string read_input(const std::string& path) {
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw_error(ErrorKind::kInvalidParameter, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  if (ss.str().empty()) {
    throw_error(ErrorKind::kInvalidParameter, "no input document on stdin or --file");
  }
  return ss.str();
}

JointDistribution load_joint(const std::string& path) {
  JointDistribution j = joint_from_json(read_input(path));
  validate(j);
  return j;
}

Channel load_channel(const std::string& path) {
  Channel w = channel_from_json(read_input(path));
  validate(w);
  return w;
}

ProbVector load_dist(const std::string& path) {
  ProbVector p = prob_vector_from_json(read_input(path));
  validate(p);
  return p;
}

struct Output {
  std::string format = "json";

  // Analysis results ship inside a run record; replaying the recorded
  // command reproduces the result payload exactly. The verify report
  // omits the wall time so that two runs are byte-identical.
  void record(const std::string& command, JsonValue params, JsonValue result,
              std::optional<double> wall_ms) const {
    JsonValue rec = JsonValue::object();
    rec.set("command", command);
    rec.set("params", std::move(params));
    rec.set("version", kVersion);
    if (wall_ms) {
      rec.set("wall_time_ms", *wall_ms);
    } else {
      rec.set("wall_time_ms", nullptr);
    }
    rec.set("result", std::move(result));
    if (format == "csv") {
      std::cout << json_to_csv(rec);
    } else {
      std::cout << rec.pretty() << "\n";
    }
  }

  // Generated documents stream bare so they can be piped into the next
  // subcommand.
  template <typename Doc>
  void document(const Doc& doc) const {
    if (format == "csv") {
      std::cout << to_csv(doc);
    } else {
      std::cout << to_json(doc).pretty() << "\n";
    }
  }
};

JsonValue witness_json(const SmoothingReport& r) {
  if (const auto* v = std::get_if<SubProbVector>(&r.witness)) {
    return to_json(*v);
  }
  const auto& cw = std::get<ConditionalWitness>(r.witness);
  JsonValue arr = JsonValue::array();
  for (std::size_t i = 0; i < cw.y_labels.size(); ++i) {
    JsonValue entry = JsonValue::object();
    entry.set("y", cw.y_labels[i]);
    entry.set("witness", to_json(cw.per_y[i]));
    arr.push(std::move(entry));
  }
  return arr;
}

JsonValue smoothing_json(const SmoothingReport& r) {
  JsonValue v = JsonValue::object();
  v.set("value_bits", r.value_bits);
  v.set("removed_mass", r.removed_mass);
  v.set("witness", witness_json(r));
  return v;
}

JsonValue partition_json(const CommonPartition& cp) {
  JsonValue blocks = JsonValue::array();
  for (const auto& block : cp.blocks) {
    JsonValue atoms = JsonValue::array();
    for (const auto& [x, y] : block) {
      JsonValue pair = JsonValue::array();
      pair.push(cp.x_labels[x]);
      pair.push(cp.y_labels[y]);
      atoms.push(std::move(pair));
    }
    blocks.push(std::move(atoms));
  }
  JsonValue mass = JsonValue::array();
  for (double m : cp.block_mass) mass.push(m);
  JsonValue v = JsonValue::object();
  v.set("blocks", std::move(blocks));
  v.set("block_mass", std::move(mass));
  return v;
}

JsonValue code_json(const Code& c) {
  JsonValue cb = JsonValue::array();
  for (const auto& s : c.codebook) cb.push(s);
  JsonValue dec = JsonValue::object();
  for (const auto& [y, m] : c.decoder) dec.set(y, static_cast<std::int64_t>(m));
  JsonValue v = JsonValue::object();
  v.set("codebook", std::move(cb));
  v.set("decoder", std::move(dec));
  return v;
}

Code code_from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.contains("codebook") || !doc.contains("decoder")) {
    throw_error(ErrorKind::kInvalidParameter, "code document needs codebook and decoder");
  }
  Code c;
  for (const auto& s : doc["codebook"]) c.codebook.push_back(s.get<std::string>());
  for (auto it = doc["decoder"].begin(); it != doc["decoder"].end(); ++it) {
    c.decoder[it.key()] = it.value().get<int>();
  }
  return c;
}

JsonValue task_json(const TaskReport& r) {
  JsonValue v = JsonValue::object();
  if (r.achieved_length) v.set("achieved_length", std::int64_t{*r.achieved_length});
  if (r.achieved_storage) v.set("achieved_storage", std::int64_t{*r.achieved_storage});
  v.set("achieved_error", r.achieved_error);
  if (r.worst_seed_error) v.set("worst_seed_error", *r.worst_seed_error);
  if (r.bound_lower) v.set("bound_lower", *r.bound_lower);
  if (r.bound_upper) v.set("bound_upper", *r.bound_upper);
  v.set("hash", r.hash);
  v.set("seed", static_cast<std::int64_t>(r.seed));
  v.set("seed_count", std::int64_t{r.seed_count});
  return v;
}

double parse_fraction(const std::string& s) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw_error(ErrorKind::kInvalidParameter, "not a number: '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

ProbVector dist_argument(const std::string& arg, const std::string& prefix) {
  if (arg.rfind("uniform:", 0) == 0) {
    return zoo::uniform(std::stoul(arg.substr(8)), prefix);
  }
  return load_dist(arg);
}

int run_gen(const std::string& kind, const std::vector<std::string>& args,
            std::uint64_t seed, const Output& out) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw_error(ErrorKind::kInvalidParameter,
                  "generator '" + kind + "' expects " + std::to_string(n) + " arguments");
    }
  };
  if (kind == "identity") {
    need(1);
    out.document(zoo::identity(std::stoul(args[0])));
  } else if (kind == "bsc") {
    need(1);
    out.document(zoo::bsc(parse_fraction(args[0])));
  } else if (kind == "bec") {
    need(1);
    out.document(zoo::bec(parse_fraction(args[0])));
  } else if (kind == "zchannel") {
    need(1);
    out.document(zoo::zchannel(parse_fraction(args[0])));
  } else if (kind == "random") {
    need(2);
    out.document(zoo::random_channel(std::stoul(args[0]), std::stoul(args[1]), seed));
  } else if (kind == "matrix") {
    need(1);
    out.document(load_channel(args[0]));
  } else if (kind == "joint") {
    if (args.empty()) {
      throw_error(ErrorKind::kInvalidParameter, "gen joint needs a joint kind");
    }
    std::string jk = args[0];
    std::vector<std::string> rest(args.begin() + 1, args.end());
    if (jk == "equal") {
      if (rest.size() != 1) throw_error(ErrorKind::kInvalidParameter, "joint equal N");
      out.document(zoo::equal(std::stoul(rest[0])));
    } else if (jk == "product") {
      if (rest.size() != 2) throw_error(ErrorKind::kInvalidParameter, "joint product P Q");
      out.document(zoo::product(dist_argument(rest[0], "x"), dist_argument(rest[1], "y")));
    } else if (jk == "blocks") {
      if (rest.size() != 2) {
        throw_error(ErrorKind::kInvalidParameter, "joint blocks MASSES SIZES");
      }
      std::vector<double> masses;
      for (const auto& m : split(rest[0], ',')) masses.push_back(parse_fraction(m));
      std::vector<std::pair<std::size_t, std::size_t>> sizes;
      for (const auto& s : split(rest[1], ',')) {
        std::vector<std::string> dims = split(s, 'x');
        if (dims.size() != 2) {
          throw_error(ErrorKind::kInvalidParameter, "block size must look like 2x2");
        }
        sizes.emplace_back(std::stoul(dims[0]), std::stoul(dims[1]));
      }
      out.document(zoo::blocks(masses, sizes));
    } else if (jk == "custom") {
      if (rest.size() != 1) throw_error(ErrorKind::kInvalidParameter, "joint custom FILE");
      out.document(load_joint(rest[0]));
    } else {
      throw_error(ErrorKind::kInvalidParameter, "unknown joint kind '" + jk + "'");
    }
  } else {
    throw_error(ErrorKind::kInvalidParameter, "unknown generator '" + kind + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-shot information measures over finite distributions and channels"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "generate a channel or joint document");
  std::string gen_kind;
  std::vector<std::string> gen_args;
  std::uint64_t gen_seed = 0;
  gen->add_option("kind", gen_kind,
                  "identity|bsc|bec|zchannel|random|matrix|joint")
      ->required();
  gen->add_option("args", gen_args, "generator arguments");
  gen->add_option("--seed", gen_seed, "seed for random generators");

  // entropy
  auto* entropy = app.add_subcommand("entropy", "plain and smoothed entropies");
  std::string entropy_file, entropy_kind;
  double entropy_eps = -1.0;
  bool entropy_cond = false;
  entropy->add_option("--dist", entropy_file, "input document (default stdin)");
  entropy->add_option("--kind", entropy_kind, "min|max|shannon")->required();
  entropy->add_option("--eps", entropy_eps, "smoothing budget");
  entropy->add_flag("--cond", entropy_cond, "conditional variant (joint input)");

  // common-info
  auto* cinfo = app.add_subcommand("common-info", "common random variable of a joint");
  std::string cinfo_file;
  cinfo->add_option("--joint", cinfo_file, "input joint (default stdin)");

  // cmin
  auto* cmin = app.add_subcommand("cmin", "smoothed common-part min-entropy bracket");
  std::string cmin_file;
  double cmin_eps = 0.0, cmin_eps1 = 0.0, cmin_eps2 = 0.0;
  bool cmin_bounds = false, cmin_oracle = false;
  cmin->add_option("--joint", cmin_file, "input joint (default stdin)");
  cmin->add_option("--eps", cmin_eps, "perturbation budget")->required();
  cmin->add_flag("--bounds", cmin_bounds, "also evaluate the upper bound");
  cmin->add_option("--eps1", cmin_eps1, "upper-bound split");
  cmin->add_option("--eps2", cmin_eps2, "upper-bound split");
  cmin->add_flag("--oracle", cmin_oracle, "also run the exact enumeration");

  // capacity-bounds
  auto* capb = app.add_subcommand("capacity-bounds", "one-shot capacity bracket");
  std::string capb_file;
  double capb_eps = 0.0, capb_ep = 0.0, capb_epp = 0.0, capb_e1 = 0.0, capb_e2 = 0.0;
  capb->add_option("--channel", capb_file, "input channel (default stdin)");
  capb->add_option("--eps", capb_eps, "target error")->required();
  capb->add_option("--eps-prime", capb_ep, "lower-bound split")->required();
  capb->add_option("--eps-pp", capb_epp, "lower-bound split")->required();
  capb->add_option("--eps1", capb_e1, "upper-bound split")->required();
  capb->add_option("--eps2", capb_e2, "upper-bound split")->required();

  // exact-capacity
  auto* excap = app.add_subcommand("exact-capacity", "exhaustive one-shot capacity");
  std::string excap_file;
  double excap_eps = 0.0;
  oracle::OracleBudget budget;
  excap->add_option("--channel", excap_file, "input channel (default stdin)");
  excap->add_option("--eps", excap_eps, "target error")->required();
  excap->add_option("--max-codebook", budget.max_codebook, "codebook budget");
  excap->add_option("--max-outputs", budget.max_outputs, "output alphabet budget");
  excap->add_option("--max-support", budget.max_support_atoms, "support budget");
  excap->add_option("--time-limit", budget.time_limit_seconds, "seconds");

  // build-code
  auto* bcode = app.add_subcommand("build-code", "random coding with expurgation");
  std::string bcode_file, bcode_dist;
  double bc_e1 = 0.0, bc_e2 = 0.0, bc_e3 = 0.0, bc_eps = 0.0;
  std::uint64_t bc_seed = 0;
  bcode->add_option("--channel", bcode_file, "input channel (default stdin)");
  bcode->add_option("--input-dist", bcode_dist, "input law (default uniform)");
  bcode->add_option("--eps1", bc_e1, "input smoothing")->required();
  bcode->add_option("--eps2", bc_e2, "conditional smoothing")->required();
  bcode->add_option("--eps3", bc_e3, "sampling slack")->required();
  bcode->add_option("--eps", bc_eps, "expurgation threshold")->required();
  bcode->add_option("--seed", bc_seed, "sampling seed")->required();

  // eval-code
  auto* ecode = app.add_subcommand("eval-code", "exact errors of a code document");
  std::string ecode_file, ecode_code;
  ecode->add_option("--channel", ecode_file, "input channel (default stdin)");
  ecode->add_option("--code", ecode_code, "code document")->required();

  // extract
  auto* ext = app.add_subcommand("extract", "seeded randomness extraction");
  std::string ext_file;
  int ext_len = 0, ext_seeds = 16;
  ext->add_option("--joint", ext_file, "input joint (default stdin)");
  ext->add_option("--len", ext_len, "output bits")->required();
  ext->add_option("--seeds", ext_seeds, "seeds to average (0 sweeps the family)");

  // compress
  auto* comp = app.add_subcommand("compress", "random binning with side information");
  std::string comp_file;
  int comp_bins = 0;
  std::uint64_t comp_seed = 0;
  comp->add_option("--joint", comp_file, "input joint (default stdin)");
  comp->add_option("--bins", comp_bins, "storage bits")->required();
  comp->add_option("--seed", comp_seed, "hash seed");

  // extract-common
  auto* extc = app.add_subcommand("extract-common", "shared extraction from the common part");
  std::string extc_file;
  double extc_eps = 0.0;
  int extc_len = 0;
  std::uint64_t extc_seed = 0;
  extc->add_option("--joint", extc_file, "input joint (default stdin)");
  extc->add_option("--eps", extc_eps, "perturbation budget")->required();
  extc->add_option("--len", extc_len, "output bits")->required();
  extc->add_option("--seed", extc_seed, "hash seed");

  // decompose
  auto* dec = app.add_subcommand("decompose", "peel a law into uniform components");
  std::string dec_file;
  dec->add_option("--dist", dec_file, "input law (default stdin)");

  // oracle-cext
  auto* ocext = app.add_subcommand("oracle-cext", "exact extractable common randomness");
  std::string ocext_file;
  double ocext_eps = 0.0;
  ocext->add_option("--joint", ocext_file, "input joint (default stdin)");
  ocext->add_option("--eps", ocext_eps, "error budget")->required();

  // asymptotic-capacity
  auto* acap = app.add_subcommand("asymptotic-capacity", "many-use capacity baseline");
  std::string acap_file;
  double acap_tol = 1e-9;
  acap->add_option("--channel", acap_file, "input channel (default stdin)");
  acap->add_option("--tol", acap_tol, "additive tolerance");

  // verify
  auto* ver = app.add_subcommand("verify", "run the full property suite");
  bool ver_tiny = false;
  ver->add_flag("--tiny", ver_tiny, "reduced instance counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  auto wall = [&]() {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  try {
    if (*gen) return run_gen(gen_kind, gen_args, gen_seed, out);

    if (*entropy) {
      JsonValue params = JsonValue::object();
      params.set("kind", entropy_kind);
      params.set("cond", entropy_cond);
      if (entropy_eps >= 0.0) params.set("eps", entropy_eps);
      std::string text = read_input(entropy_file);
      JsonValue result = JsonValue::object();
      if (entropy_cond) {
        JointDistribution j = joint_from_json(text);
        validate(j);
        if (entropy_kind == "shannon") {
          double hxy = shannon_entropy(flatten(j));
          double hy = shannon_entropy(marginal_y(j));
          result.set("value_bits", hxy - hy);
        } else if (entropy_eps >= 0.0) {
          Epsilon eps(entropy_eps);
          result = smoothing_json(entropy_kind == "min" ? smooth_h_min_cond(j, eps)
                                                        : smooth_h_max_cond(j, eps));
        } else {
          result.set("value_bits", entropy_kind == "min" ? h_min_cond(j) : h_max_cond(j));
        }
      } else {
        ProbVector p;
        if (detect_kind(text) == DocKind::kProbVector) {
          p = prob_vector_from_json(text);
        } else {
          JointDistribution j = joint_from_json(text);
          validate(j);
          p = flatten(j);
        }
        validate(p);
        if (entropy_kind == "shannon") {
          result.set("value_bits", shannon_entropy(p));
        } else if (entropy_eps >= 0.0) {
          Epsilon eps(entropy_eps);
          result = smoothing_json(entropy_kind == "min" ? smooth_h_min(p, eps)
                                                        : smooth_h_max(p, eps));
        } else {
          result.set("value_bits", entropy_kind == "min" ? h_min(p) : h_max(p));
        }
      }
      out.record("entropy", std::move(params), std::move(result), wall());
      return 0;
    }

    if (*cinfo) {
      JointDistribution j = load_joint(cinfo_file);
      CommonPartition cp = gacs_korner(j);
      JsonValue result = partition_json(cp);
      result.set("common_entropy_bits", common_entropy(cp));
      result.set("common_min_entropy_bits", common_min_entropy(cp));
      out.record("common-info", JsonValue::object(), std::move(result), wall());
      return 0;
    }

    if (*cmin) {
      JointDistribution j = load_joint(cmin_file);
      JsonValue params = JsonValue::object();
      params.set("eps", cmin_eps);
      CminResult r = c_min_lower(j, Epsilon(cmin_eps));
      JsonValue result = JsonValue::object();
      result.set("lower_bits", r.lower_bits);
      if (cmin_bounds) {
        params.set("eps1", cmin_eps1);
        params.set("eps2", cmin_eps2);
        result.set("upper_bits",
                   c_min_upper(j, Epsilon(cmin_eps), Epsilon(cmin_eps1), Epsilon(cmin_eps2)));
      }
      if (cmin_oracle) {
        result.set("oracle_bits", oracle::exact_c_min(j, Epsilon(cmin_eps)));
      }
      result.set("perturbation_mass", r.perturbation_mass);
      result.set("perturbed_joint", to_json(r.perturbed_joint));
      out.record("cmin", std::move(params), std::move(result), wall());
      return 0;
    }

    if (*capb) {
      Channel w = load_channel(capb_file);
      JsonValue params = JsonValue::object();
      params.set("eps", capb_eps);
      params.set("eps_prime", capb_ep);
      params.set("eps_pp", capb_epp);
      params.set("eps1", capb_e1);
      params.set("eps2", capb_e2);
      CapacityBounds lo =
          capacity_lower(w, Epsilon(capb_eps), Epsilon(capb_ep), Epsilon(capb_epp));
      CapacityBounds hi =
          capacity_upper(w, Epsilon(capb_eps), Epsilon(capb_e1), Epsilon(capb_e2));
      JsonValue result = JsonValue::object();
      result.set("lower_bits", *lo.lower_bits);
      result.set("upper_bits", *hi.upper_bits);
      result.set("lower_witness", to_json(*lo.lower_witness));
      out.record("capacity-bounds", std::move(params), std::move(result), wall());
      return 0;
    }

    if (*excap) {
      Channel w = load_channel(excap_file);
      JsonValue params = JsonValue::object();
      params.set("eps", excap_eps);
      params.set("max_codebook", budget.max_codebook);
      params.set("max_outputs", budget.max_outputs);
      params.set("max_support", budget.max_support_atoms);
      params.set("time_limit_seconds", budget.time_limit_seconds);
      JsonValue result = JsonValue::object();
      result.set("bits", oracle::exact_one_shot_capacity(w, Epsilon(excap_eps), budget));
      out.record("exact-capacity", std::move(params), std::move(result), wall());
      return 0;
    }

    if (*bcode) {
      Channel w = load_channel(bcode_file);
      ProbVector p = bcode_dist.empty() ? zoo::uniform(w.nx(), "x") : load_dist(bcode_dist);
      if (bcode_dist.empty()) p.labels = w.x_labels;
      JsonValue params = JsonValue::object();
      params.set("eps1", bc_e1);
      params.set("eps2", bc_e2);
      params.set("eps3", bc_e3);
      params.set("eps", bc_eps);
      params.set("seed", static_cast<std::int64_t>(bc_seed));
      BuildReport r = build_code_report(w, p, Epsilon(bc_e1), Epsilon(bc_e2), Epsilon(bc_e3),
                                        Epsilon(bc_eps), bc_seed);
      JsonValue result = JsonValue::object();
      result.set("code", code_json(r.code));
      result.set("sampled", r.sampled);
      result.set("distinct", r.distinct);
      result.set("expurgated", r.expurgated);
      result.set("max_error", r.errors.max_error);
      result.set("avg_error", r.errors.avg_error);
      out.record("build-code", std::move(params), std::move(result), wall());
      return 0;
    }

    if (*ecode) {
      Channel w = load_channel(ecode_file);
      std::ifstream in(ecode_code);
      if (!in) throw_error(ErrorKind::kInvalidParameter, "cannot open '" + ecode_code + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      CodeErrors e = evaluate_code(w, code_from_json(ss.str()));
      JsonValue result = JsonValue::object();
      result.set("max_error", e.max_error);
      result.set("avg_error", e.avg_error);
      out.record("eval-code", JsonValue::object(), std::move(result), wall());
      return 0;
    }

    if (*ext) {
      JointDistribution j = load_joint(ext_file);
      JsonValue params = JsonValue::object();
      params.set("len", std::int64_t{ext_len});
      params.set("seeds", std::int64_t{ext_seeds});
      out.record("extract", std::move(params), task_json(extract(j, ext_len, ext_seeds)),
                 wall());
      return 0;
    }

    if (*comp) {
      JointDistribution j = load_joint(comp_file);
      JsonValue params = JsonValue::object();
      params.set("bins", std::int64_t{comp_bins});
      params.set("seed", static_cast<std::int64_t>(comp_seed));
      out.record("compress", std::move(params),
                 task_json(compress_with_side_info(j, comp_bins, comp_seed)), wall());
      return 0;
    }

    if (*extc) {
      JointDistribution j = load_joint(extc_file);
      JsonValue params = JsonValue::object();
      params.set("eps", extc_eps);
      params.set("len", std::int64_t{extc_len});
      params.set("seed", static_cast<std::int64_t>(extc_seed));
      out.record("extract-common", std::move(params),
                 task_json(extract_common(j, Epsilon(extc_eps), extc_len, extc_seed)),
                 wall());
      return 0;
    }

    if (*dec) {
      ProbVector p = load_dist(dec_file);
      auto parts = oracle::uniform_decomposition(p);
      JsonValue comps = JsonValue::array();
      for (const auto& [weight, comp_part] : parts) {
        JsonValue entry = JsonValue::object();
        entry.set("weight", weight);
        entry.set("component", to_json(comp_part));
        comps.push(std::move(entry));
      }
      JsonValue result = JsonValue::object();
      result.set("level", std::exp2(-h_min(p)));
      result.set("components", std::move(comps));
      out.record("decompose", JsonValue::object(), std::move(result), wall());
      return 0;
    }

    if (*ocext) {
      JointDistribution j = load_joint(ocext_file);
      JsonValue params = JsonValue::object();
      params.set("eps", ocext_eps);
      JsonValue result = JsonValue::object();
      result.set("bits", oracle::exact_c_ext(j, Epsilon(ocext_eps)));
      out.record("oracle-cext", std::move(params), std::move(result), wall());
      return 0;
    }

    if (*acap) {
      Channel w = load_channel(acap_file);
      JsonValue params = JsonValue::object();
      params.set("tol", acap_tol);
      JsonValue result = JsonValue::object();
      result.set("bits", asymptotic_capacity(w, acap_tol));
      out.record("asymptotic-capacity", std::move(params), std::move(result), wall());
      return 0;
    }

    if (*ver) {
      verify::SuiteReport report = verify::run_suite(ver_tiny);
      JsonValue checks = JsonValue::array();
      for (const auto& c : report.checks) {
        JsonValue entry = JsonValue::object();
        entry.set("name", c.name);
        entry.set("pass", c.pass);
        entry.set("details", c.details);
        checks.push(std::move(entry));
      }
      JsonValue notes = JsonValue::array();
      for (const auto& n : report.notes) notes.push(n);
      JsonValue params = JsonValue::object();
      params.set("tiny", ver_tiny);
      JsonValue result = JsonValue::object();
      result.set("checks", std::move(checks));
      result.set("notes", std::move(notes));
      result.set("all_pass", report.all_pass());
      out.record("verify", std::move(params), std::move(result), std::nullopt);
      return report.all_pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
