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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args, const std::string& redirect = "") {
  std::string cmd = std::string(ONESHOT_CLI_PATH) + " " + args + redirect + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

nlohmann::json parse(const std::string& s) {
  nlohmann::json doc = nlohmann::json::parse(s, nullptr, false);
  REQUIRE(!doc.is_discarded());
  return doc;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/oneshot_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("gen emits documents that flow through a pipeline") {
  RunResult gen = run("gen bsc 0.1");
  CHECK(gen.exit_code == 0);
  nlohmann::json ch = parse(gen.output);
  CHECK(ch["row_stochastic"] == true);
  CHECK(ch["matrix"][0][0] == doctest::Approx(0.9));

  RunResult piped = run(
      "gen bsc 0.1 | " ONESHOT_CLI_PATH
      " capacity-bounds --eps 0.2 --eps-prime 0.05 --eps-pp 0.05 --eps1 0.05 --eps2 0.05");
  CHECK(piped.exit_code == 0);
  nlohmann::json rec = parse(piped.output);
  CHECK(rec["command"] == "capacity-bounds");
  CHECK(rec["result"].contains("lower_bits"));
  CHECK(rec["result"].contains("upper_bits"));
  CHECK(rec["result"]["lower_bits"].get<double>() <=
        rec["result"]["upper_bits"].get<double>());
}

TEST_CASE("entropy subcommand reproduces the water-filling value") {
  std::string dist = write_temp(
      "uniform4.json", R"({"labels": ["a","b","c","d"], "mass": [0.25,0.25,0.25,0.25]})");
  RunResult r = run("entropy --dist " + dist + " --eps 0.5 --kind min");
  CHECK(r.exit_code == 0);
  nlohmann::json rec = parse(r.output);
  CHECK(rec["result"]["value_bits"].get<double>() == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(rec["result"].contains("witness"));
}

TEST_CASE("exit codes distinguish argument, validation, and budget failures") {
  CHECK(run("entropy --no-such-flag").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);

  std::string bad = write_temp("bad.json", R"({"labels": ["a","b"], "mass": [0.5,0.6]})");
  CHECK(run("entropy --dist " + bad + " --kind min").exit_code == 3);

  std::string big = write_temp("big.json", [] {
    std::string labels, mass;
    for (int i = 0; i < 5; ++i) {
      labels += (i ? "," : "") + std::string("\"s") + std::to_string(i) + "\"";
      mass += (i ? "," : "") + std::string("0.2");
    }
    return "{\"x_labels\": [" + labels + "], \"y_labels\": [" + labels +
           "], \"matrix\": [[0.2,0,0,0,0],[0,0.2,0,0,0],[0,0,0.2,0,0],[0,0,0,0.2,0],"
           "[0,0,0,0,0.2]]}";
  }());
  CHECK(run("oracle-cext --eps 0.1 --joint " + big).exit_code == 4);
}

TEST_CASE("build-code then eval-code round trip") {
  std::string channel = run("gen identity 16").output;
  std::string chfile = write_temp("id16.json", channel);
  RunResult built = run("build-code --channel " + chfile +
                        " --eps1 0 --eps2 0 --eps3 0.25 --eps 0.5 --seed 7");
  CHECK(built.exit_code == 0);
  nlohmann::json rec = parse(built.output);
  CHECK(rec["result"]["max_error"].get<double>() == doctest::Approx(0.0));
  CHECK(rec["result"]["code"]["codebook"].size() >= 2);

  std::string codefile = write_temp("code.json", rec["result"]["code"].dump());
  RunResult eval = run("eval-code --channel " + chfile + " --code " + codefile);
  CHECK(eval.exit_code == 0);
  CHECK(parse(eval.output)["result"]["max_error"].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("csv output mirrors matrices") {
  RunResult r = run("--format csv gen bsc 0.25");
  CHECK(r.exit_code == 0);
  CHECK(r.output == ",y0,y1\nx0,0.75,0.25\nx1,0.25,0.75\n");
}

TEST_CASE("common-info and cmin pipeline") {
  std::string joint = run("gen joint blocks 0.6,0.4 2x2,2x2").output;
  std::string jfile = write_temp("blocks.json", joint);
  RunResult ci = run("common-info --joint " + jfile);
  CHECK(ci.exit_code == 0);
  nlohmann::json rec = parse(ci.output);
  CHECK(rec["result"]["block_mass"].size() == 2);

  RunResult cm = run("cmin --eps 0.1 --oracle --joint " + jfile);
  CHECK(cm.exit_code == 0);
  nlohmann::json cmr = parse(cm.output);
  CHECK(cmr["result"]["lower_bits"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cmr["result"]["oracle_bits"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("seeded subcommands replay identically") {
  std::string ch = write_temp("rand.json", run("gen random 3 3 --seed 5").output);
  RunResult a = run("build-code --channel " + ch +
                    " --eps1 0.05 --eps2 0.05 --eps3 0.5 --eps 0.4 --seed 11");
  RunResult b = run("build-code --channel " + ch +
                    " --eps1 0.05 --eps2 0.05 --eps3 0.5 --eps 0.4 --seed 11");
  if (a.exit_code == 0) {
    CHECK(parse(a.output)["result"] == parse(b.output)["result"]);
  } else {
    CHECK(a.exit_code == b.exit_code);
  }
}

TEST_CASE("verify --tiny passes and its report is byte-identical across runs") {
  RunResult first = run("verify --tiny");
  CHECK(first.exit_code == 0);
  RunResult second = run("verify --tiny");
  CHECK(second.exit_code == 0);
  CHECK(first.output == second.output);
  nlohmann::json rec = parse(first.output);
  CHECK(rec["result"]["all_pass"] == true);
  CHECK(rec["wall_time_ms"].is_null());
}
