// Copyright 2026 The bipotoc Authors
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

#pragma once

// Acceptance criteria 1-11, shared by the acceptance test binary and the
// `check` command of the CLI.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace bipotoc::acceptance {

struct Result {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct Options {
  std::filesystem::path scenario_dir;
  bool skip_slow = false;      // skips criteria 10 and 11
  std::vector<int> only;       // empty: all criteria
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  bool slow;
  std::function<std::pair<bool, std::string>(const Options&)> check;
};

const std::vector<Criterion>& criteria();

// One line: "[PASS] 3 <title>: <detail> (1.2 s, budget 300 s)".
std::string format(const Result& r);

// Runs the selected criteria, printing each line to `out` as it completes.
std::vector<Result> run_all(const Options& options, std::ostream* out);

// Helpers exposed for tests.
int sign_changes(const std::vector<double>& values, double eps);
double mean_abs_second_difference(const std::vector<double>& values);
// Sign changes of the first difference from the first decrease onwards.
int sign_changes_after_rise(const std::vector<double>& values, double eps);

}  // namespace bipotoc::acceptance
