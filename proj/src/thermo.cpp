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

#include "bipotoc/thermo.hpp"

#include <cmath>
#include <string>

#include "bipotoc/liouville.hpp"

namespace bipotoc {

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Subsystem tag)
    : matrix_(std::move(matrix)), tag_(tag) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw DimensionError("DensityMatrix: matrix must be square and non-empty");
  }
  require_hermitian(matrix_, "density matrix");
  const double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    throw DomainError("DensityMatrix: trace is " + std::to_string(trace));
  }
  const ComplexMatrix sym = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  const double lowest = solver.eigenvalues()(0);
  if (lowest < -kNegativeEigenvalueTolerance) {
    throw DomainError("DensityMatrix: negative eigenvalue " + std::to_string(lowest));
  }
  matrix_ = sym;
}

DensityMatrix maximally_mixed(int dim, Subsystem tag) {
  if (dim < 1) throw DimensionError("maximally_mixed: dimension must be positive");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim), tag);
}

DensityMatrix basis_state(int dim, int index, Subsystem tag) {
  if (dim < 1 || index < 0 || index >= dim) {
    throw DimensionError("basis_state: index " + std::to_string(index) + " out of range for dimension " +
                         std::to_string(dim));
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m), tag);
}

DensityMatrix ground_state(const ComplexMatrix& h, Subsystem tag) {
  const HermitianEigen eig = herm_eig(h);
  const ComplexVector v = eig.vectors.col(0);
  return DensityMatrix(v * v.adjoint(), tag);
}

DensityMatrix gibbs_state(const ComplexMatrix& h, double temperature) {
  if (!(temperature > 0.0)) {
    throw DomainError("gibbs_state: temperature must be positive");
  }
  const HermitianEigen eig = herm_eig(h);
  const double e0 = eig.values(0);
  RealVector weights = ((eig.values.array() - e0) / -temperature).exp().matrix();
  weights /= weights.sum();
  return DensityMatrix(eig.vectors * weights.cast<Complex>().asDiagonal() * eig.vectors.adjoint(),
                       Subsystem::system);
}

double vn_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double lambda = solver.eigenvalues()(k);
    if (lambda > kPsdClamp) s -= lambda * std::log(lambda);
  }
  return s;
}

double rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionError("rel_entropy: dimensions " + std::to_string(rho.dim()) + " and " +
                         std::to_string(sigma.dim()) + " differ");
  }
  const PsdLog ls = log_psd(sigma.matrix());
  // Diagonal of rho in the eigenbasis of sigma.
  const ComplexMatrix rotated = ls.eigenvectors.adjoint() * rho.matrix() * ls.eigenvectors;
  double kernel_weight = 0.0;
  double cross = 0.0;
  for (Eigen::Index k = 0; k < rotated.rows(); ++k) {
    const double w = rotated(k, k).real();
    if (ls.in_support[static_cast<std::size_t>(k)]) {
      cross += w * std::log(ls.eigenvalues(k));
    } else {
      kernel_weight += w;
    }
  }
  if (kernel_weight > kSupportTolerance) return std::numeric_limits<double>::infinity();
  return -vn_entropy(rho) - cross;
}

namespace {

ComplexMatrix reduce(const ComplexMatrix& joint, BipartiteSpace space, int keep) {
  const int dims[] = {space.dim_a, space.dim_b};
  const int kept[] = {keep};
  return partial_trace(joint, dims, kept);
}

}  // namespace

ThermoSeries entropy_production_unitary(const ComplexMatrix& hamiltonian, BipartiteSpace space,
                                        const DensityMatrix& rho_s0, const DensityMatrix& rho_e0,
                                        std::span<const double> times) {
  if (hamiltonian.rows() != space.dim() || hamiltonian.cols() != space.dim()) {
    throw DimensionError("entropy_production_unitary: Hamiltonian does not match the split");
  }
  if (rho_s0.dim() != space.dim_a || rho_e0.dim() != space.dim_b) {
    throw DimensionError("entropy_production_unitary: initial states do not match the split");
  }
  const HermitianEigen eig = herm_eig(hamiltonian);
  const ComplexMatrix rho0 = kron(rho_s0.matrix(), rho_e0.matrix());
  ThermoSeries out;
  out.times.assign(times.begin(), times.end());
  for (double t : times) {
    const ComplexVector phases =
        (eig.values.cast<Complex>() * Complex(0.0, -t)).array().exp().matrix();
    const ComplexMatrix u = eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
    const DensityMatrix rho_se(u * rho0 * u.adjoint());
    const DensityMatrix rho_s(reduce(rho_se.matrix(), space, 0), Subsystem::system);
    const DensityMatrix rho_e(reduce(rho_se.matrix(), space, 1), Subsystem::environment);

    const double sigma = rel_entropy(rho_se, DensityMatrix(kron(rho_s.matrix(), rho_e0.matrix())));
    const double s_corr = -rel_entropy(rho_se, DensityMatrix(kron(rho_s.matrix(), rho_e.matrix())));
    const double env = rel_entropy(rho_e, rho_e0);
    out.sigma.push_back(sigma);
    out.s_corr.push_back(s_corr);
    out.sum.push_back(sigma + s_corr);
    out.env_rel_entropy.push_back(env);
    out.support_violation.push_back(std::isinf(sigma) || std::isinf(s_corr) || std::isinf(env));
  }
  return out;
}

ThermoSeries entropy_production_gksl(const ModelSpec& model, const DensityMatrix& rho0,
                                     std::span<const double> times, double temperature) {
  if (!model.dissipative()) {
    throw DomainError("entropy_production_gksl: model has no dissipative channels");
  }
  if (rho0.dim() != model.space.dim()) {
    throw DimensionError("entropy_production_gksl: initial state does not match the model");
  }
  const DensityMatrix eq = gibbs_state(model.hamiltonian, temperature);
  const double initial = rel_entropy(rho0, eq);
  if (std::isinf(initial)) {
    throw NumericalError("entropy_production_gksl: Gibbs state is not full rank");
  }
  const Superoperator generator = build_state_liouvillian(model);
  ThermoSeries out;
  out.times.assign(times.begin(), times.end());
  out.sigma.resize(times.size());
  out.support_violation.assign(times.size(), false);
  for_each_propagator(generator, times, [&](std::size_t k, double, const ComplexMatrix& map) {
    const ComplexMatrix evolved = apply_map(map, rho0.matrix());
    const DensityMatrix rho_t(0.5 * (evolved + evolved.adjoint()));
    const double current = rel_entropy(rho_t, eq);
    out.support_violation[k] = std::isinf(current);
    out.sigma[k] = initial - current;
  });
  return out;
}

}  // namespace bipotoc
