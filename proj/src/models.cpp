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

#include "bipotoc/models.hpp"

#include <cmath>
#include <numbers>

#include "bipotoc/operators.hpp"

namespace bipotoc {

double thermal_occupation(double transition_frequency, double temperature) {
  if (temperature < 0.0) throw ValidationError("temperature", "must be non-negative");
  if (!(transition_frequency > 0.0)) {
    throw ValidationError("transition_frequency", "must be positive");
  }
  if (temperature == 0.0) return 0.0;
  return 1.0 / std::expm1(transition_frequency / temperature);
}

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::dicke:
      return "dicke";
    case ModelKind::tavis_cummings:
      return "tc";
    case ModelKind::ising:
      return "ising";
  }
  return "unknown";
}

void ModelSpec::validate() const {
  const int d = space.dim();
  if (hamiltonian.rows() != d || hamiltonian.cols() != d) {
    throw ValidationError("hamiltonian", "dimension does not match the bipartition");
  }
  if (hermiticity_defect(hamiltonian) > kHermitianTolerance) {
    throw ValidationError("hamiltonian", "not Hermitian");
  }
  for (const auto& jump : jumps) {
    if (jump.op.rows() != d || jump.op.cols() != d) {
      throw ValidationError("jumps", "operator " + jump.label + " has the wrong dimension");
    }
    if (!(jump.rate >= 0.0)) {
      throw ValidationError("jumps", "rate of " + jump.label + " is negative");
    }
  }
}

namespace {

void check_atom_field(const AtomFieldParams& p) {
  if (!(p.omega0 > 0.0)) throw ValidationError("omega0", "must be positive");
  if (!(p.omegac > 0.0)) throw ValidationError("omegac", "must be positive");
  if (!std::isfinite(p.coupling)) throw ValidationError("lambda", "must be finite");
  if (p.n_atoms < 1) throw ValidationError("n_atoms", "must be at least 1");
  if (p.n_max < 2) throw ValidationError("n_max", "must be at least 2");
  if (!(p.gamma >= 0.0)) throw ValidationError("gamma", "must be non-negative");
  if (!(p.kappa >= 0.0)) throw ValidationError("kappa", "must be non-negative");
  if (!(p.temperature_a >= 0.0)) throw ValidationError("T_A", "must be non-negative");
  if (!(p.temperature_b >= 0.0)) throw ValidationError("T_B", "must be non-negative");
}

void add_jump(std::vector<JumpOperator>& jumps, ComplexMatrix op, double rate,
              std::string label) {
  if (rate > 0.0) jumps.push_back({std::move(op), rate, std::move(label)});
}

ModelSpec build_atom_field(const AtomFieldParams& p, ModelKind kind) {
  check_atom_field(p);
  const SpinOperators spin = collective_spin(0.5 * p.n_atoms);
  const BosonOperators mode = boson_ops(p.n_max);
  const int da = spin.dim();
  const int db = p.n_max;
  const ComplexMatrix ia = ComplexMatrix::Identity(da, da);
  const ComplexMatrix ib = ComplexMatrix::Identity(db, db);
  const double root_n = std::sqrt(static_cast<double>(p.n_atoms));

  ModelSpec model;
  model.space = BipartiteSpace(da, db);
  model.kind = kind;
  model.hamiltonian = p.omega0 * kron(spin.jz, ib) + p.omegac * kron(ia, mode.num);
  if (kind == ModelKind::dicke) {
    model.hamiltonian += (p.coupling / root_n) * kron(spin.jx, mode.a + mode.a_dag);
    model.label = "dicke";
  } else {
    model.hamiltonian += (p.coupling / (2.0 * root_n)) *
                         (kron(spin.jp, mode.a) + kron(spin.jm, mode.a_dag));
    model.label = "tc";
  }

  const double occ_a = thermal_occupation(p.omega0, p.temperature_a);
  const double occ_b = thermal_occupation(p.omegac, p.temperature_b);
  add_jump(model.jumps, kron(spin.jm, ib), p.gamma * (occ_a + 1.0), "J-");
  add_jump(model.jumps, kron(spin.jp, ib), p.gamma * occ_a, "J+");
  add_jump(model.jumps, kron(ia, mode.a), p.kappa * (occ_b + 1.0), "a");
  add_jump(model.jumps, kron(ia, mode.a_dag), p.kappa * occ_b, "a+");
  model.validate();
  return model;
}

void check_ising(const IsingParams& p) {
  if (p.n_spins < 2) throw ValidationError("n_spins", "must be at least 2");
  if (p.n_spins > 12) throw ValidationError("n_spins", "dense simulation limited to 12 spins");
  if (p.split < 1 || p.split >= p.n_spins) {
    throw ValidationError("split", "must leave at least one site on each side");
  }
  if (p.theta < -1e-12 || p.theta > std::numbers::pi / 2 + 1e-12) {
    throw ValidationError("theta", "must lie in [0, pi/2]");
  }
  if (!std::isfinite(p.field) || !std::isfinite(p.coupling) ||
      !std::isfinite(p.first_bond_scale)) {
    throw ValidationError("params", "field, coupling and bond scale must be finite");
  }
  for (double t : p.temperatures) {
    if (!(t >= 0.0)) throw ValidationError("temperatures", "must be non-negative");
  }
}

ComplexMatrix chain_hamiltonian(int n_sites, const IsingParams& p) {
  const Eigen::Index d = Eigen::Index{1} << n_sites;
  const ComplexMatrix local =
      p.field * (std::sin(p.theta) * pauli(Pauli::x) + std::cos(p.theta) * pauli(Pauli::z));
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  for (int site = 1; site <= n_sites; ++site) h += embed_site(n_sites, site, local);
  for (int site = 1; site < n_sites; ++site) {
    const double bond = site == 1 ? p.coupling * p.first_bond_scale : p.coupling;
    h += bond * pauli_site(n_sites, site, Pauli::z).embedded *
         pauli_site(n_sites, site + 1, Pauli::z).embedded;
  }
  return h;
}

}  // namespace

ModelSpec build_dicke(const AtomFieldParams& p) { return build_atom_field(p, ModelKind::dicke); }

ModelSpec build_tc(const AtomFieldParams& p) {
  return build_atom_field(p, ModelKind::tavis_cummings);
}

double dicke_critical_coupling(double omega0, double omegac) {
  return 0.5 * std::sqrt(omega0 * omegac);
}

ModelSpec build_ising(const IsingParams& p, double gamma) {
  check_ising(p);
  if (!(gamma >= 0.0)) throw ValidationError("gamma", "must be non-negative");

  std::vector<int> bath_sites;
  if (p.topology == BathTopology::uniform) {
    for (int s = 1; s <= p.n_spins; ++s) bath_sites.push_back(s);
    if (p.temperatures.size() != 1 && p.temperatures.size() != bath_sites.size()) {
      throw ValidationError("temperatures",
                            "uniform baths need one temperature or one per site");
    }
  } else {
    bath_sites = {1, p.n_spins};
    if (p.temperatures.size() != 2) {
      throw ValidationError("temperatures", "boundary baths need exactly two temperatures");
    }
  }

  ModelSpec model;
  model.kind = ModelKind::ising;
  model.label = "ising";
  model.space = BipartiteSpace(1 << p.split, 1 << (p.n_spins - p.split));
  model.hamiltonian = chain_hamiltonian(p.n_spins, p);

  // Every spin has transition frequency 2B.
  const double omega = 2.0 * std::abs(p.field);
  for (std::size_t k = 0; k < bath_sites.size(); ++k) {
    const int site = bath_sites[k];
    const double temp = p.temperatures.size() == 1 ? p.temperatures[0] : p.temperatures[k];
    const double occ = omega > 0.0 ? thermal_occupation(omega, temp) : 0.0;
    const std::string tag = std::to_string(site);
    add_jump(model.jumps, pauli_site(p.n_spins, site, Pauli::minus).embedded,
             gamma * (occ + 1.0), "sigma-_" + tag);
    add_jump(model.jumps, pauli_site(p.n_spins, site, Pauli::plus).embedded, gamma * occ,
             "sigma+_" + tag);
  }
  model.validate();
  return model;
}

ComplexMatrix ising_subsystem_hamiltonian(const IsingParams& p) {
  check_ising(p);
  return chain_hamiltonian(p.split, p);
}

}  // namespace bipotoc
