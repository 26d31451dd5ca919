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

// Von Neumann and relative entropies, entropy production and correlation
// entropy for a closed system-environment pair and for GKSL dynamics.

#include <limits>
#include <span>
#include <vector>

#include "bipotoc/models.hpp"
#include "bipotoc/tensor.hpp"

namespace bipotoc {

enum class Subsystem { system, environment, joint };

inline constexpr double kTraceTolerance = 1e-10;
// rho-weight on the kernel of sigma above which S(rho||sigma) is infinite.
inline constexpr double kSupportTolerance = 1e-8;

// A validated density matrix: Hermitian, unit trace and positive
// semidefinite, each to within 1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix, Subsystem tag = Subsystem::joint);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Subsystem tag() const noexcept { return tag_; }
  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
  Subsystem tag_;
};

DensityMatrix maximally_mixed(int dim, Subsystem tag = Subsystem::joint);
DensityMatrix basis_state(int dim, int index, Subsystem tag = Subsystem::joint);
// Projector on the lowest eigenvector of h (the first one if degenerate).
DensityMatrix ground_state(const ComplexMatrix& h, Subsystem tag = Subsystem::joint);

// e^{-H/T} / Z. Throws DomainError for T <= 0.
DensityMatrix gibbs_state(const ComplexMatrix& h, double temperature);

// -sum lambda ln lambda over eigenvalues above the clamp.
double vn_entropy(const DensityMatrix& rho);

// Tr rho (ln rho - ln sigma), or +infinity when rho puts more than 1e-8 of
// weight on the kernel of sigma.
double rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

inline bool is_support_violation(double value) { return value == std::numeric_limits<double>::infinity(); }

struct ThermoSeries {
  std::vector<double> times;
  std::vector<double> sigma;            // entropy production
  std::vector<double> s_corr;           // correlation entropy (unitary only)
  std::vector<double> sum;              // sigma + s_corr (unitary only)
  std::vector<double> env_rel_entropy;  // S(rho_E(t) || rho_E(0)) (unitary only)
  std::vector<bool> support_violation;
};

// rho_SE(t) = U (rho_S(0) (x) rho_E(0)) U^dag with S = factor A, E = factor B:
//   sigma  = S(rho_SE(t) || rho_S(t) (x) rho_E(0))
//   s_corr = -S(rho_SE(t) || rho_S(t) (x) rho_E(t))
ThermoSeries entropy_production_unitary(const ComplexMatrix& hamiltonian, BipartiteSpace space,
                                        const DensityMatrix& rho_s0, const DensityMatrix& rho_e0,
                                        std::span<const double> times);

// sigma(t) = S(rho(0) || rho_eq) - S(rho(t) || rho_eq) with rho_eq the Gibbs
// state of the model Hamiltonian at `temperature` and rho(t) from the
// state-picture propagator. Only `times` and `sigma` are filled.
ThermoSeries entropy_production_gksl(const ModelSpec& model, const DensityMatrix& rho0,
                                     std::span<const double> times, double temperature);

}  // namespace bipotoc
