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

// Declarative scenarios: a JSON description of a model, its dynamics, the
// requested observables and a time grid, run into a CSV table.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bipotoc/models.hpp"

namespace bipotoc {

const char* version();

enum class Dynamics { unitary, gksl };

enum class Observable {
  otoc_unitary,
  otoc_open,
  otoc_haar_mc,
  op_entanglement,
  entropy_production,
  correlation_entropy,
};

const char* to_string(Dynamics d);
const char* to_string(Observable o);

// Initial system state for the thermodynamic observables. The environment
// always starts maximally mixed.
//   z_ground:     lowest eigenstate of the collective/total z operator on S
//                 (basis index d_S - 1)
//   local_ground: ground state of the S-local Hamiltonian
enum class InitialState { z_ground, local_ground };

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 10.0;
  int n_points = 100;

  std::vector<double> points() const;
};

struct SweepAxis {
  std::string axis;
  std::vector<nlohmann::json> values;
};

struct ScenarioConfig {
  std::string name;
  std::string description;
  ModelKind model = ModelKind::ising;
  AtomFieldParams atom_field;
  IsingParams ising;
  double ising_gamma = 0.0;
  Dynamics dynamics = Dynamics::unitary;
  std::vector<Observable> observables;
  TimeGrid grid;
  std::uint64_t rng_seed = 1;
  int mc_pairs = 200;
  InitialState initial_state = InitialState::z_ground;
  std::optional<double> gibbs_temperature;
  std::string output;
  std::optional<SweepAxis> sweep;
  nlohmann::json source;  // the document this config was parsed from

  BipartiteSpace space() const;
  ModelSpec build_model() const;
  bool has(Observable o) const;
};

// Angles as numbers or strings such as "pi/2", "7pi/16", "-pi/4", "0.3".
double parse_angle(const nlohmann::json& value, const std::string& field);

// Throws ValidationError naming the offending field.
ScenarioConfig parse_scenario(const nlohmann::json& doc);
ScenarioConfig load_scenario(const std::filesystem::path& file);

// Every effective setting, defaults included.
nlohmann::json resolved_json(const ScenarioConfig& config);

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> metadata;  // without the leading '#'
  std::filesystem::path path;         // empty when not written

  std::vector<double> column(const std::string& name) const;
};

struct RunOptions {
  std::optional<std::filesystem::path> out_dir;  // nullopt: do not write
  bool timestamp = true;
  std::optional<std::uint64_t> seed_override;
};

// Column names follow the observable order of the config; the Monte-Carlo
// column is followed by `otoc_haar_mc_stderr`, and requesting both entropy
// observables under unitary dynamics adds `entropy_sum`.
std::vector<std::string> result_columns(const ScenarioConfig& config);

ResultTable run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

std::string format_double(double value);
std::string to_csv(const ResultTable& table, bool timestamp);
// Writes to a temporary file next to `path` and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

struct SweepFailure {
  std::string value;
  std::string message;
};

struct SweepResult {
  std::vector<ResultTable> tables;
  std::vector<SweepFailure> failures;
};

// Axis names are keys under "params" ("theta", "coupling"), dotted paths from
// the document root ("time_grid.t_end"), or several keys joined by '+'
// ("gamma+kappa") that all receive the same value.
nlohmann::json apply_axis(const nlohmann::json& doc, const std::string& axis,
                          const nlohmann::json& value);

// Runs one scenario per value and collects per-run errors.
SweepResult sweep(const ScenarioConfig& base, const SweepAxis& axis, const RunOptions& options = {});

std::string value_label(const nlohmann::json& value);

struct FockConvergence {
  int n_max = 0;
  int n_max_next = 0;
  double max_difference = 0.0;
  std::string worst_column;
  bool converged = false;
};

// Reruns a Dicke/Tavis-Cummings scenario with n_max + 1 and compares every
// observable column.
FockConvergence fock_convergence(const ScenarioConfig& config, double tolerance);

}  // namespace bipotoc
