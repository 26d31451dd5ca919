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

// Command-line front end: run and sweep scenarios, run the acceptance
// suite, list shipped scenarios.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "bipotoc/errors.hpp"
#include "bipotoc/scenario.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

json parse_axis_value(const std::string& text) {
  try {
    json v = json::parse(text);
    if (v.is_number() || v.is_array()) return v;
  } catch (const json::parse_error&) {
  }
  return text;
}

// NAME=v1,v2,... with commas inside brackets kept together.
bipotoc::SweepAxis parse_axis(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
    throw bipotoc::ValidationError("--axis", "expected NAME=v1,v2,...");
  }
  bipotoc::SweepAxis axis;
  axis.axis = spec.substr(0, eq);
  std::string current;
  int depth = 0;
  for (char ch : spec.substr(eq + 1)) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      axis.values.push_back(parse_axis_value(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  axis.values.push_back(parse_axis_value(current));
  return axis;
}

int report_sweep(const bipotoc::SweepResult& result) {
  for (const auto& table : result.tables) std::cout << table.path.string() << "\n";
  for (const auto& failure : result.failures) {
    std::cerr << "error [" << failure.value << "]: " << failure.message << "\n";
  }
  return result.failures.empty() ? 0 : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite OTOCs, operator entanglement and entropy production"};
  app.set_version_flag("--version", std::string(bipotoc::version()));
  app.require_subcommand(1);

  std::string scenario_file;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  bool no_timestamp = false;
  double fock_tol = -1.0;

  auto* run = app.add_subcommand("run", "Run a scenario (all sweep values if it declares a sweep)");
  run->add_option("scenario", scenario_file, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory");
  auto* seed_opt = run->add_option("--seed", seed, "Override rng_seed");
  run->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp metadata line");
  run->add_option("--fock-convergence", fock_tol,
                  "Also rerun with n_max + 1 and fail if any column moves by more than TOL");

  std::string axis_spec;
  auto* sw = app.add_subcommand("sweep", "Run a scenario once per value of a parameter axis");
  sw->add_option("scenario", scenario_file, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  sw->add_option("--axis", axis_spec, "NAME=v1,v2,...")->required();
  sw->add_option("--out", out_dir, "Output directory");
  auto* sweep_seed_opt = sw->add_option("--seed", seed, "Override rng_seed");
  sw->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp metadata line");

  bool skip_slow = false;
  std::string scenario_dir = BIPOTOC_SCENARIO_DIR;
  auto* check = app.add_subcommand("check", "Run the invariant and oracle suite");
  check->add_flag("--skip-slow", skip_slow, "Skip the long-running criteria");
  check->add_option("--scenarios", scenario_dir, "Directory of shipped scenarios");

  auto* list = app.add_subcommand("list-scenarios", "List shipped scenarios");
  list->add_option("--dir", scenario_dir, "Scenario directory");

  CLI11_PARSE(app, argc, argv);

  try {
    bipotoc::RunOptions options;
    options.out_dir = fs::path(out_dir);
    options.timestamp = !no_timestamp;

    if (*run) {
      if (seed_opt->count() > 0) options.seed_override = seed;
      const auto config = bipotoc::load_scenario(scenario_file);
      if (fock_tol >= 0.0) {
        const auto fc = bipotoc::fock_convergence(config, fock_tol);
        std::cout << "fock convergence n_max " << fc.n_max << " -> " << fc.n_max_next
                  << ": max difference " << fc.max_difference << " in " << fc.worst_column
                  << (fc.converged ? " (converged)" : " (NOT converged)") << "\n";
        if (!fc.converged) return kExitRuntime;
      }
      if (config.sweep) return report_sweep(bipotoc::sweep(config, *config.sweep, options));
      const auto table = bipotoc::run_scenario(config, options);
      std::cout << table.path.string() << "\n";
      return 0;
    }
    if (*sw) {
      if (sweep_seed_opt->count() > 0) options.seed_override = seed;
      const auto config = bipotoc::load_scenario(scenario_file);
      return report_sweep(bipotoc::sweep(config, parse_axis(axis_spec), options));
    }
    if (*check) {
      bipotoc::acceptance::Options opts;
      opts.scenario_dir = scenario_dir;
      opts.skip_slow = skip_slow;
      bool all = true;
      for (const auto& r : bipotoc::acceptance::run_all(opts, &std::cout)) all = all && r.passed;
      return all ? 0 : kExitRuntime;
    }
    if (*list) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(scenario_dir)) {
        if (entry.path().extension() == ".json") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        try {
          const auto config = bipotoc::load_scenario(f);
          std::cout << f.filename().string() << "  " << config.description << "\n";
        } catch (const std::exception& e) {
          std::cout << f.filename().string() << "  INVALID: " << e.what() << "\n";
        }
      }
      return 0;
    }
  } catch (const bipotoc::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
