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

// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any
// selected criterion fails.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bipotoc::acceptance::Options options;
  std::string dir = BIPOTOC_SCENARIO_DIR;
  app.add_option("--only", options.only, "Criterion ids to run");
  app.add_option("--scenarios", dir, "Scenario directory");
  app.add_flag("--skip-slow", options.skip_slow, "Skip criteria 10 and 11");
  CLI11_PARSE(app, argc, argv);
  options.scenario_dir = dir;

  bool all = true;
  for (const auto& r : bipotoc::acceptance::run_all(options, &std::cout)) all = all && r.passed;
  return all ? 0 : 1;
}
