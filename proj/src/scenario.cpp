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

#include "bipotoc/scenario.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <regex>
#include <set>
#include <sstream>
#include <unistd.h>

#include "bipotoc/errors.hpp"
#include "bipotoc/liouville.hpp"
#include "bipotoc/operators.hpp"
#include "bipotoc/scrambling.hpp"
#include "bipotoc/thermo.hpp"

#ifndef BIPOTOC_VERSION
#define BIPOTOC_VERSION "unknown"
#endif

namespace bipotoc {

using nlohmann::json;

const char* version() { return BIPOTOC_VERSION; }

const char* to_string(Dynamics d) { return d == Dynamics::unitary ? "unitary" : "gksl"; }

const char* to_string(Observable o) {
  switch (o) {
    case Observable::otoc_unitary: return "otoc_unitary";
    case Observable::otoc_open: return "otoc_open";
    case Observable::otoc_haar_mc: return "otoc_haar_mc";
    case Observable::op_entanglement: return "op_entanglement";
    case Observable::entropy_production: return "entropy_production";
    case Observable::correlation_entropy: return "correlation_entropy";
  }
  return "?";
}

namespace {

const char* to_string(InitialState s) {
  return s == InitialState::z_ground ? "z_ground" : "local_ground";
}

const char* to_string(BathTopology t) { return t == BathTopology::uniform ? "uniform" : "boundary"; }

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ValidationError(field, message);
}

// Reads declared keys from an object and rejects any other key.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) fail(path_.empty() ? "<root>" : path_, "must be an object");
  }

  std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const json* find(const std::string& key) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  double number(const std::string& key, double fallback) {
    const json* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_number()) fail(field(key), "must be a number");
    const double x = v->get<double>();
    if (!std::isfinite(x)) fail(field(key), "must be finite");
    return x;
  }

  std::optional<double> optional_number(const std::string& key) {
    if (obj_.find(key) == obj_.end()) {
      seen_.insert(key);
      return std::nullopt;
    }
    return number(key, 0.0);
  }

  int integer(const std::string& key, int fallback) {
    const json* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_number_integer()) fail(field(key), "must be an integer");
    return v->get<int>();
  }

  std::string string(const std::string& key, const std::string& fallback) {
    const json* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_string()) fail(field(key), "must be a string");
    return v->get<std::string>();
  }

  void finish() const {
    for (const auto& [key, _] : obj_.items()) {
      if (!seen_.contains(key)) fail(field(key), "unknown field");
    }
  }

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

template <typename Enum>
Enum parse_enum(const std::string& text, const std::string& field,
                std::initializer_list<std::pair<const char*, Enum>> choices) {
  std::string allowed;
  for (const auto& [name, value] : choices) {
    if (text == name) return value;
    allowed += allowed.empty() ? name : std::string(", ") + name;
  }
  fail(field, "unknown value '" + text + "' (expected one of: " + allowed + ")");
}

void parse_atom_field(ObjectReader& r, AtomFieldParams& p) {
  p.omega0 = r.number("omega0", p.omega0);
  p.omegac = r.number("omegac", p.omegac);
  p.coupling = r.number("lambda", p.coupling);
  p.n_atoms = r.integer("n_atoms", p.n_atoms);
  p.n_max = r.integer("n_max", p.n_max);
  p.gamma = r.number("gamma", p.gamma);
  p.kappa = r.number("kappa", p.kappa);
  p.temperature_a = r.number("T_A", p.temperature_a);
  p.temperature_b = r.number("T_B", p.temperature_b);
}

int parse_split(const json& v, int n_spins, const std::string& field) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    static const std::regex ratio(R"(\s*(\d+)\s*:\s*(\d+)\s*)");
    std::smatch m;
    const std::string s = v.get<std::string>();
    if (std::regex_match(s, m, ratio)) {
      const int a = std::stoi(m[1]);
      const int b = std::stoi(m[2]);
      if (a + b != n_spins) fail(field, "split " + s + " does not add up to n_spins");
      return a;
    }
  }
  fail(field, "must be an integer or a string 'k:m'");
}

void parse_ising(ObjectReader& r, IsingParams& p, double& gamma) {
  p.n_spins = r.integer("n_spins", p.n_spins);
  p.field = r.number("field", p.field);
  p.coupling = r.number("coupling", p.coupling);
  if (const json* v = r.find("theta")) p.theta = parse_angle(*v, r.field("theta"));
  if (const json* v = r.find("split")) p.split = parse_split(*v, p.n_spins, r.field("split"));
  p.topology = parse_enum<BathTopology>(r.string("bath_topology", "uniform"), r.field("bath_topology"),
                                        {{"uniform", BathTopology::uniform},
                                         {"boundary", BathTopology::boundary}});
  if (const json* v = r.find("temperatures")) {
    if (v->is_number()) {
      p.temperatures = {v->get<double>()};
    } else if (v->is_array() && !v->empty()) {
      p.temperatures.clear();
      for (const auto& t : *v) {
        if (!t.is_number()) fail(r.field("temperatures"), "entries must be numbers");
        p.temperatures.push_back(t.get<double>());
      }
    } else {
      fail(r.field("temperatures"), "must be a number or a non-empty array of numbers");
    }
  }
  gamma = r.number("gamma", gamma);
  p.first_bond_scale = r.number("boundary_bond_scale", p.first_bond_scale);
}

bool rates_vanish(const ScenarioConfig& c) {
  if (c.model == ModelKind::ising) return c.ising_gamma == 0.0;
  return c.atom_field.gamma == 0.0 && c.atom_field.kappa == 0.0;
}

void check_compatibility(const ScenarioConfig& c) {
  const bool zero_rates = rates_vanish(c);
  if (c.dynamics == Dynamics::unitary && !zero_rates) {
    fail("dynamics", "unitary dynamics requires zero dissipation rates (use gksl)");
  }
  for (Observable o : c.observables) {
    const std::string name = to_string(o);
    switch (o) {
      case Observable::otoc_open:
        if (c.dynamics != Dynamics::gksl) fail("observables", name + " requires gksl dynamics");
        break;
      case Observable::otoc_unitary:
      case Observable::op_entanglement:
        if (!zero_rates) fail("observables", name + " requires unitary or zero-rate dynamics");
        break;
      case Observable::correlation_entropy:
        if (c.dynamics != Dynamics::unitary) fail("observables", name + " requires unitary dynamics");
        break;
      case Observable::entropy_production:
        if (c.dynamics == Dynamics::gksl) {
          if (zero_rates) fail("observables", name + " under gksl needs nonzero rates");
          if (!c.gibbs_temperature) {
            fail("gibbs_temperature", "required for entropy_production under gksl dynamics");
          }
          if (!(*c.gibbs_temperature > 0.0)) fail("gibbs_temperature", "must be positive");
        }
        break;
      case Observable::otoc_haar_mc:
        break;
    }
  }
}

}  // namespace

std::vector<double> TimeGrid::points() const {
  std::vector<double> out(static_cast<std::size_t>(n_points));
  if (n_points == 1) {
    out[0] = t_start;
    return out;
  }
  const double step = (t_end - t_start) / (n_points - 1);
  for (int k = 0; k < n_points; ++k) out[static_cast<std::size_t>(k)] = t_start + k * step;
  out.back() = t_end;
  return out;
}

double parse_angle(const json& value, const std::string& field) {
  if (value.is_number()) return value.get<double>();
  if (!value.is_string()) fail(field, "must be a number or an angle string like '7pi/16'");
  std::string s = value.get<std::string>();
  std::erase_if(s, [](unsigned char c) { return std::isspace(c); });
  static const std::regex pi_form(R"(([+-]?)(\d*\.?\d*)\*?pi(?:/(\d+\.?\d*))?)");
  std::smatch m;
  if (std::regex_match(s, m, pi_form)) {
    double coef = m[2].length() > 0 ? std::stod(m[2]) : 1.0;
    if (m[1] == "-") coef = -coef;
    const double den = m[3].matched ? std::stod(m[3]) : 1.0;
    if (den == 0.0) fail(field, "zero denominator in '" + s + "'");
    return coef * std::numbers::pi / den;
  }
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec == std::errc() && ptr == s.data() + s.size()) return x;
  fail(field, "cannot parse angle '" + value.get<std::string>() + "'");
}

BipartiteSpace ScenarioConfig::space() const { return build_model().space; }

ModelSpec ScenarioConfig::build_model() const {
  try {
    switch (model) {
      case ModelKind::dicke: return build_dicke(atom_field);
      case ModelKind::tavis_cummings: return build_tc(atom_field);
      case ModelKind::ising: return build_ising(ising, ising_gamma);
    }
  } catch (const ValidationError& e) {
    const std::string field = e.field();
    const std::string what = e.what();
    const std::string message = what.substr(std::min(what.size(), field.size() + 2));
    throw ValidationError("params." + field, message);
  }
  throw ValidationError("model", "unsupported model");
}

bool ScenarioConfig::has(Observable o) const {
  return std::find(observables.begin(), observables.end(), o) != observables.end();
}

ScenarioConfig parse_scenario(const json& doc) {
  ScenarioConfig c;
  c.source = doc;
  ObjectReader root(doc, "");
  c.name = root.string("name", "scenario");
  if (c.name.empty()) fail("name", "must not be empty");
  c.description = root.string("description", "");
  const json* model = root.find("model");
  if (model == nullptr || !model->is_string()) fail("model", "required string: dicke, tc or ising");
  c.model = parse_enum<ModelKind>(model->get<std::string>(), "model",
                                  {{"dicke", ModelKind::dicke},
                                   {"tc", ModelKind::tavis_cummings},
                                   {"ising", ModelKind::ising}});

  static const json empty_params = json::object();
  const json* params = root.find("params");
  ObjectReader pr(params ? *params : empty_params, "params");
  if (c.model == ModelKind::ising) {
    parse_ising(pr, c.ising, c.ising_gamma);
  } else {
    parse_atom_field(pr, c.atom_field);
  }
  pr.finish();

  if (const json* bip = root.find("bipartition")) {
    if (!bip->is_array() || bip->size() != 2 || !(*bip)[0].is_number_integer() ||
        !(*bip)[1].is_number_integer()) {
      fail("bipartition", "must be [d_A, d_B]");
    }
    const BipartiteSpace expected = c.space();
    if ((*bip)[0].get<int>() != expected.dim_a || (*bip)[1].get<int>() != expected.dim_b) {
      fail("bipartition", "does not match the model parameters (expected [" +
                              std::to_string(expected.dim_a) + ", " +
                              std::to_string(expected.dim_b) + "])");
    }
  }

  c.dynamics = parse_enum<Dynamics>(root.string("dynamics", "unitary"), "dynamics",
                                    {{"unitary", Dynamics::unitary}, {"gksl", Dynamics::gksl}});

  const json* obs = root.find("observables");
  if (obs == nullptr || !obs->is_array() || obs->empty()) {
    fail("observables", "required non-empty array");
  }
  for (const auto& o : *obs) {
    if (!o.is_string()) fail("observables", "entries must be strings");
    const Observable parsed = parse_enum<Observable>(
        o.get<std::string>(), "observables",
        {{"otoc_unitary", Observable::otoc_unitary},
         {"otoc_open", Observable::otoc_open},
         {"otoc_haar_mc", Observable::otoc_haar_mc},
         {"op_entanglement", Observable::op_entanglement},
         {"entropy_production", Observable::entropy_production},
         {"correlation_entropy", Observable::correlation_entropy}});
    if (c.has(parsed)) fail("observables", "duplicate entry " + o.get<std::string>());
    c.observables.push_back(parsed);
  }

  const json* grid = root.find("time_grid");
  if (grid == nullptr) fail("time_grid", "required object {t_start, t_end, n_points}");
  ObjectReader gr(*grid, "time_grid");
  c.grid.t_start = gr.number("t_start", 0.0);
  c.grid.t_end = gr.number("t_end", c.grid.t_end);
  c.grid.n_points = gr.integer("n_points", c.grid.n_points);
  gr.finish();
  if (c.grid.n_points < 1) fail("time_grid.n_points", "must be at least 1");
  if (c.grid.n_points > 1 && !(c.grid.t_end > c.grid.t_start)) {
    fail("time_grid.t_end", "must exceed t_start");
  }
  if (c.grid.t_start < 0.0) fail("time_grid.t_start", "must be non-negative");

  if (const json* seed = root.find("rng_seed")) {
    if (!seed->is_number_unsigned()) fail("rng_seed", "must be a non-negative integer");
    c.rng_seed = seed->get<std::uint64_t>();
  }
  c.mc_pairs = root.integer("mc_pairs", kDefaultMcPairs);
  if (c.mc_pairs < 1) fail("mc_pairs", "must be at least 1");
  c.initial_state = parse_enum<InitialState>(root.string("initial_state", "z_ground"), "initial_state",
                                             {{"z_ground", InitialState::z_ground},
                                              {"local_ground", InitialState::local_ground}});
  c.gibbs_temperature = root.optional_number("gibbs_temperature");
  if (!c.gibbs_temperature && c.model != ModelKind::ising &&
      c.atom_field.temperature_a == c.atom_field.temperature_b && c.atom_field.temperature_a > 0.0) {
    c.gibbs_temperature = c.atom_field.temperature_a;
  }
  c.output = root.string("output", c.name + ".csv");
  if (c.output.empty()) fail("output", "must not be empty");

  if (const json* sw = root.find("sweep")) {
    ObjectReader sr(*sw, "sweep");
    SweepAxis axis;
    axis.axis = sr.string("axis", "");
    if (axis.axis.empty()) fail("sweep.axis", "required");
    const json* values = sr.find("values");
    if (values == nullptr || !values->is_array() || values->empty()) {
      fail("sweep.values", "required non-empty array");
    }
    axis.values.assign(values->begin(), values->end());
    sr.finish();
    c.sweep = std::move(axis);
  }
  root.finish();

  // Builds the model once so that parameter errors surface here.
  (void)c.build_model();
  check_compatibility(c);
  return c;
}

ScenarioConfig load_scenario(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ValidationError("file", "cannot open " + file.string());
  json doc;
  try {
    doc = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ValidationError("file", file.string() + ": " + e.what());
  }
  return parse_scenario(doc);
}

json resolved_json(const ScenarioConfig& c) {
  json j;
  j["name"] = c.name;
  j["model"] = to_string(c.model);
  json p;
  if (c.model == ModelKind::ising) {
    p["n_spins"] = c.ising.n_spins;
    p["field"] = c.ising.field;
    p["coupling"] = c.ising.coupling;
    p["theta"] = c.ising.theta;
    p["split"] = c.ising.split;
    p["bath_topology"] = to_string(c.ising.topology);
    p["temperatures"] = c.ising.temperatures;
    p["gamma"] = c.ising_gamma;
    p["boundary_bond_scale"] = c.ising.first_bond_scale;
  } else {
    p["omega0"] = c.atom_field.omega0;
    p["omegac"] = c.atom_field.omegac;
    p["lambda"] = c.atom_field.coupling;
    p["n_atoms"] = c.atom_field.n_atoms;
    p["n_max"] = c.atom_field.n_max;
    p["gamma"] = c.atom_field.gamma;
    p["kappa"] = c.atom_field.kappa;
    p["T_A"] = c.atom_field.temperature_a;
    p["T_B"] = c.atom_field.temperature_b;
  }
  j["params"] = p;
  const BipartiteSpace space = c.space();
  j["bipartition"] = {space.dim_a, space.dim_b};
  j["dynamics"] = to_string(c.dynamics);
  json obs = json::array();
  for (Observable o : c.observables) obs.push_back(to_string(o));
  j["observables"] = obs;
  j["time_grid"] = {{"t_start", c.grid.t_start}, {"t_end", c.grid.t_end}, {"n_points", c.grid.n_points}};
  j["rng_seed"] = c.rng_seed;
  j["mc_pairs"] = c.mc_pairs;
  j["initial_state"] = to_string(c.initial_state);
  if (c.gibbs_temperature) j["gibbs_temperature"] = *c.gibbs_temperature;
  j["output"] = c.output;
  return j;
}

std::vector<double> ResultTable::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column named " + name);
  const auto k = static_cast<std::size_t>(it - columns.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[k]);
  return out;
}

std::vector<std::string> result_columns(const ScenarioConfig& c) {
  std::vector<std::string> cols{"t"};
  for (Observable o : c.observables) {
    cols.emplace_back(to_string(o));
    if (o == Observable::otoc_haar_mc) cols.emplace_back("otoc_haar_mc_stderr");
  }
  if (c.dynamics == Dynamics::unitary && c.has(Observable::entropy_production) &&
      c.has(Observable::correlation_entropy)) {
    cols.emplace_back("entropy_sum");
  }
  return cols;
}

namespace {

DensityMatrix initial_system_state(const ScenarioConfig& c, BipartiteSpace space) {
  if (c.initial_state == InitialState::z_ground) {
    return basis_state(space.dim_a, space.dim_a - 1, Subsystem::system);
  }
  if (c.model == ModelKind::ising) {
    return ground_state(ising_subsystem_hamiltonian(c.ising), Subsystem::system);
  }
  const SpinOperators spin = collective_spin(0.5 * c.atom_field.n_atoms);
  return ground_state(c.atom_field.omega0 * spin.jz, Subsystem::system);
}

void put_column(ResultTable& table, const std::string& name, const std::vector<double>& values) {
  const auto it = std::find(table.columns.begin(), table.columns.end(), name);
  const auto k = static_cast<std::size_t>(it - table.columns.begin());
  for (std::size_t r = 0; r < values.size(); ++r) table.rows[r][k] = values[r];
}

std::string timestamp_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream out;
  out << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

ResultTable run_scenario(const ScenarioConfig& config_in, const RunOptions& options) {
  ScenarioConfig config = config_in;
  if (options.seed_override) config.rng_seed = *options.seed_override;
  check_compatibility(config);

  const ModelSpec model = config.build_model();
  const BipartiteSpace space = model.space;
  const std::vector<double> times = config.grid.points();

  ResultTable table;
  table.columns = result_columns(config);
  table.rows.assign(times.size(), std::vector<double>(table.columns.size(), 0.0));
  for (std::size_t r = 0; r < times.size(); ++r) table.rows[r][0] = times[r];
  table.metadata.push_back(std::string("bipotoc ") + version());
  table.metadata.push_back("config " + resolved_json(config).dump());

  try {
    std::optional<Superoperator> adjoint;
    auto adjoint_generator = [&]() -> const Superoperator& {
      if (!adjoint) adjoint = build_adjoint_liouvillian(model);
      return *adjoint;
    };

    for (Observable o : config.observables) {
      switch (o) {
        case Observable::otoc_unitary:
          put_column(table, "otoc_unitary", otoc_unitary(model.hamiltonian, space, times).values);
          break;
        case Observable::otoc_open:
          put_column(table, "otoc_open", otoc_open(adjoint_generator(), space, times).values);
          break;
        case Observable::otoc_haar_mc: {
          const OtocSeries s =
              config.dynamics == Dynamics::unitary
                  ? otoc_haar_mc(model.hamiltonian, space, times, config.mc_pairs, config.rng_seed)
                  : otoc_haar_mc(adjoint_generator(), space, times, config.mc_pairs, config.rng_seed);
          put_column(table, "otoc_haar_mc", s.values);
          put_column(table, "otoc_haar_mc_stderr", s.stderrs);
          break;
        }
        case Observable::op_entanglement:
          put_column(table, "op_entanglement", operator_entanglement(model.hamiltonian, space, times));
          break;
        case Observable::entropy_production:
          if (config.dynamics == Dynamics::gksl) {
            const DensityMatrix rho0(
                kron(initial_system_state(config, space).matrix(),
                     maximally_mixed(space.dim_b).matrix()));
            put_column(table, "entropy_production",
                       entropy_production_gksl(model, rho0, times, *config.gibbs_temperature).sigma);
          }
          break;
        case Observable::correlation_entropy:
          break;
      }
    }

    if (config.dynamics == Dynamics::unitary &&
        (config.has(Observable::entropy_production) || config.has(Observable::correlation_entropy))) {
      const ThermoSeries th = entropy_production_unitary(
          model.hamiltonian, space, initial_system_state(config, space),
          maximally_mixed(space.dim_b, Subsystem::environment), times);
      if (config.has(Observable::entropy_production)) put_column(table, "entropy_production", th.sigma);
      if (config.has(Observable::correlation_entropy)) put_column(table, "correlation_entropy", th.s_corr);
      if (config.has(Observable::entropy_production) && config.has(Observable::correlation_entropy)) {
        put_column(table, "entropy_sum", th.sum);
      }
    }
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw std::runtime_error("scenario '" + config.name + "': " + e.what());
  }

  if (options.out_dir) {
    table.path = *options.out_dir / config.output;
    write_atomic(table.path, to_csv(table, options.timestamp));
  }
  return table;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

std::string to_csv(const ResultTable& table, bool timestamp) {
  std::string out;
  for (const auto& line : table.metadata) out += "# " + line + "\n";
  if (timestamp) out += "# generated " + timestamp_now() + "\n";
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    if (k > 0) out += ',';
    out += table.columns[k];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += ',';
      out += format_double(row[k]);
    }
    out += '\n';
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

json apply_axis(const json& doc, const std::string& axis, const json& value) {
  json out = doc;
  std::stringstream names(axis);
  std::string name;
  while (std::getline(names, name, '+')) {
    if (name.empty()) throw ValidationError("sweep.axis", "empty name in '" + axis + "'");
    json* node = &out;
    std::vector<std::string> parts;
    std::stringstream path(name);
    std::string part;
    while (std::getline(path, part, '.')) parts.push_back(part);
    if (parts.size() == 1) parts.insert(parts.begin(), "params");
    for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
      json& next = (*node)[parts[k]];
      if (next.is_null()) next = json::object();
      if (!next.is_object()) throw ValidationError("sweep.axis", "'" + name + "' does not name a field");
      node = &next;
    }
    (*node)[parts.back()] = value;
  }
  out.erase("sweep");
  return out;
}

std::string value_label(const json& value) {
  std::string raw = value.is_string() ? value.get<std::string>()
                    : value.is_number() ? format_double(value.get<double>())
                                        : value.dump();
  std::string label;
  for (char ch : raw) {
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-' || ch == '_') {
      label += ch;
    } else if (ch == '/') {
      label += "over";
    } else if (ch == ',') {
      label += '_';
    }
  }
  return label.empty() ? "value" : label;
}

SweepResult sweep(const ScenarioConfig& base, const SweepAxis& axis, const RunOptions& options) {
  SweepResult result;
  std::string axis_label = axis.axis;
  for (char& ch : axis_label) {
    if (ch == '.' || ch == '+') ch = '_';
  }
  const std::filesystem::path stem = std::filesystem::path(base.output).stem();
  for (const json& value : axis.values) {
    const std::string label = value_label(value);
    try {
      json doc = apply_axis(base.source, axis.axis, value);
      doc["name"] = base.name + "_" + axis_label + "_" + label;
      doc["output"] = stem.string() + "_" + axis_label + "_" + label + ".csv";
      ScenarioConfig config = parse_scenario(doc);
      result.tables.push_back(run_scenario(config, options));
    } catch (const std::exception& e) {
      result.failures.push_back({label, e.what()});
    }
  }
  return result;
}

FockConvergence fock_convergence(const ScenarioConfig& config, double tolerance) {
  if (config.model == ModelKind::ising) {
    throw ValidationError("model", "Fock convergence applies to dicke and tc only");
  }
  FockConvergence report;
  report.n_max = config.atom_field.n_max;
  report.n_max_next = report.n_max + 1;
  ScenarioConfig bigger = config;
  bigger.atom_field.n_max = report.n_max_next;
  const ResultTable a = run_scenario(config);
  const ResultTable b = run_scenario(bigger);
  for (std::size_t k = 1; k < a.columns.size(); ++k) {
    if (a.columns[k].ends_with("_stderr")) continue;
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
      const double diff = std::abs(a.rows[r][k] - b.rows[r][k]);
      if (diff > report.max_difference || report.worst_column.empty()) {
        report.max_difference = std::max(report.max_difference, diff);
        report.worst_column = a.columns[k];
      }
    }
  }
  report.converged = report.max_difference <= tolerance;
  return report;
}

}  // namespace bipotoc
