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

// Model Hamiltonians (hbar = k_B = 1) and their Lindblad jump sets.

#include <string>
#include <vector>

#include "bipotoc/tensor.hpp"

namespace bipotoc {

// Bose-Einstein occupation 1 / (e^{omega/T} - 1); exactly 0 at T = 0.
double thermal_occupation(double transition_frequency, double temperature);

struct BathSpec {
  double rate = 0.0;
  double temperature = 0.0;
  double transition_frequency = 1.0;

  double occupation() const { return thermal_occupation(transition_frequency, temperature); }
};

struct JumpOperator {
  ComplexMatrix op;
  double rate = 0.0;
  std::string label;
};

enum class ModelKind { dicke, tavis_cummings, ising };

const char* to_string(ModelKind kind);

struct ModelSpec {
  BipartiteSpace space;
  ComplexMatrix hamiltonian;
  std::vector<JumpOperator> jumps;
  ModelKind kind = ModelKind::ising;
  std::string label;

  // Hermitian Hamiltonian, full-dimension jump operators, non-negative rates.
  void validate() const;
  bool dissipative() const noexcept { return !jumps.empty(); }
};

// Parameters shared by the Dicke and Tavis-Cummings models. The atoms form
// subsystem A (pseudospin j = n_atoms / 2, transition frequency omega0) and
// the cavity mode subsystem B (frequency omegac, Fock cutoff n_max).
struct AtomFieldParams {
  double omega0 = 2.0;
  double omegac = 2.0;
  double coupling = 1.0;  // lambda
  int n_atoms = 2;
  int n_max = 3;
  double gamma = 0.0;
  double kappa = 0.0;
  double temperature_a = 0.0;
  double temperature_b = 0.0;
};

// Dissipators: J- at gamma (n_A + 1), J+ at gamma n_A, a at kappa (n_B + 1),
// a^dagger at kappa n_B. Zero-rate channels are dropped.
ModelSpec build_dicke(const AtomFieldParams& p);
ModelSpec build_tc(const AtomFieldParams& p);

// Critical coupling sqrt(omega0 * omegac) / 2 of the Dicke model.
double dicke_critical_coupling(double omega0, double omegac);

enum class BathTopology { uniform, boundary };

struct IsingParams {
  int n_spins = 4;
  double field = 0.5;     // B
  double theta = 0.0;     // tilt angle in radians
  double coupling = 0.5;  // J
  int split = 1;          // number of leading sites in subsystem A
  BathTopology topology = BathTopology::uniform;
  // uniform: one entry (shared) or one per site; boundary: two entries
  // (first site, last site).
  std::vector<double> temperatures{0.0};
  // Multiplies J on the bond between sites 1 and 2.
  double first_bond_scale = 1.0;
};

// H = B sum_i (sin(theta) X_i + cos(theta) Z_i) + J sum_{i<N} Z_i Z_{i+1} on an
// open chain. Each bath-coupled site carries sigma_minus at gamma (n + 1)
// and sigma_plus at gamma n with n computed at omega = 2B.
ModelSpec build_ising(const IsingParams& p, double gamma);

// Field and internal couplings restricted to the first `split` sites.
ComplexMatrix ising_subsystem_hamiltonian(const IsingParams& p);

}  // namespace bipotoc
