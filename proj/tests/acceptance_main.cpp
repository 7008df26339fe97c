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

// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "oneshot/verify.hpp"

namespace {

using oneshot::verify::CheckResult;

int failures = 0;

void report(int number, const std::string& what, bool pass, double seconds,
            double budget_seconds, const std::string& details) {
  bool in_time = budget_seconds <= 0.0 || seconds <= budget_seconds;
  bool ok = pass && in_time;
  if (!ok) ++failures;
  std::printf("[%s] criterion %d: %s (%s; %.1fs", ok ? "PASS" : "FAIL", number,
              what.c_str(), details.c_str(), seconds);
  if (budget_seconds > 0.0) std::printf(" of %.0fs", budget_seconds);
  std::printf(")\n");
  std::fflush(stdout);
}

template <typename Fn>
void timed(int number, const std::string& what, double budget_seconds, Fn fn) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r = fn();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(number, what, r.pass, secs, budget_seconds, r.details);
}

std::string capture(const std::string& cmd, int* exit_code) {
  std::string out;
  std::array<char, 4096> buf{};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return out;
  }
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  *exit_code = WEXITSTATUS(pclose(pipe));
  return out;
}

}  // namespace

int main() {
  using namespace oneshot::verify;

  timed(1, "chain-rule inequalities on 1000 random joints x 10 budget tuples", 60.0,
        [] { return chain_rule_suite(1000, 10); });
  timed(2, "water-filling/truncation equals the enumeration oracle on 500 instances",
        120.0, [] { return smooth_oracle_suite(500); });
  timed(3, "extractable-randomness bracket on the tiny corpus", 300.0,
        [] { return ext_sandwich_suite(); });
  timed(4, "common-part min-entropy bracket on the tiny corpus", 0.0,
        [] { return cmin_sandwich_suite(); });
  timed(5, "one-shot capacity bracket on named and random channels", 600.0,
        [] { return capacity_sandwich_suite(true); });
  timed(6, "closed-form capacity anchors", 0.0, [] { return closed_form_anchor_suite(); });
  timed(7, "random coding meets the error and retention floors on 100 seeds", 60.0,
        [] { return coding_markov_suite(100); });
  timed(8, "extraction and binning at the prescribed lengths", 0.0,
        [] { return operational_bounds_suite(); });

  // Criterion 9: the CLI verification report replays byte for byte.
  {
    auto t0 = std::chrono::steady_clock::now();
    int code1 = -1, code2 = -1;
    std::string first = capture(std::string(ONESHOT_CLI_PATH) + " verify 2>/dev/null", &code1);
    std::string second = capture(std::string(ONESHOT_CLI_PATH) + " verify 2>/dev/null", &code2);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = code1 == 0 && code2 == 0 && !first.empty() && first == second;
    report(9, "verify twice is byte-identical and green", pass, secs, 0.0,
           std::to_string(first.size()) + " bytes, exits " + std::to_string(code1) + "/" +
               std::to_string(code2));
  }

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
