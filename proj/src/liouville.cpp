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

#include "bipotoc/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace bipotoc {
namespace {

constexpr double kUnitalityTolerance = 1e-8;
constexpr double kChoiTolerance = 1e-8;

ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

}  // namespace

Superoperator build_adjoint_liouvillian(const ModelSpec& model) {
  const int d = model.space.dim();
  if (model.hamiltonian.rows() != d) {
    throw DimensionError("build_adjoint_liouvillian: Hamiltonian does not match the space");
  }
  const ComplexMatrix id = identity(d);
  const ComplexMatrix& h = model.hamiltonian;
  Superoperator s;
  s.dim = d;
  s.picture = Picture::adjoint;
  s.matrix = Complex(0.0, 1.0) * (kron(h, id) - kron(id, h.transpose()));
  for (const auto& jump : model.jumps) {
    if (jump.op.rows() != d || jump.op.cols() != d) {
      throw DimensionError("build_adjoint_liouvillian: jump " + jump.label +
                           " has the wrong dimension");
    }
    const ComplexMatrix ldag = jump.op.adjoint();
    const ComplexMatrix ldl = ldag * jump.op;
    s.matrix += jump.rate * (kron(ldag, jump.op.transpose()) -
                             0.5 * (kron(ldl, id) + kron(id, ldl.transpose())));
  }
  return s;
}

Superoperator build_state_liouvillian(const ModelSpec& model) {
  const int d = model.space.dim();
  if (model.hamiltonian.rows() != d) {
    throw DimensionError("build_state_liouvillian: Hamiltonian does not match the space");
  }
  const ComplexMatrix id = identity(d);
  const ComplexMatrix& h = model.hamiltonian;
  Superoperator s;
  s.dim = d;
  s.picture = Picture::state;
  s.matrix = Complex(0.0, -1.0) * (kron(h, id) - kron(id, h.transpose()));
  for (const auto& jump : model.jumps) {
    if (jump.op.rows() != d || jump.op.cols() != d) {
      throw DimensionError("build_state_liouvillian: jump " + jump.label +
                           " has the wrong dimension");
    }
    const ComplexMatrix ldl = jump.op.adjoint() * jump.op;
    s.matrix += jump.rate * (kron(jump.op, jump.op.conjugate()) -
                             0.5 * (kron(ldl, id) + kron(id, ldl.transpose())));
  }
  return s;
}

Superoperator dual(const Superoperator& s) {
  Superoperator out;
  out.dim = s.dim;
  out.matrix = s.matrix.adjoint();
  out.picture = s.picture == Picture::adjoint ? Picture::state : Picture::adjoint;
  return out;
}

ComplexMatrix apply_map(const ComplexMatrix& map, const ComplexMatrix& op) {
  if (op.rows() != op.cols() || map.rows() != op.size() || map.cols() != op.size()) {
    throw DimensionError("apply_map: map and operator sizes do not match");
  }
  return devectorize(map * vectorize(op), op.rows(), op.cols());
}

bool uniform_grid(std::span<const double> times) {
  if (times.size() < 3) return true;
  const double step = times[1] - times[0];
  const double scale = std::max({1.0, std::abs(times.front()), std::abs(times.back())});
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (std::abs((times[k] - times[k - 1]) - step) > 1e-12 * scale) return false;
  }
  return true;
}

namespace {

void check_times(std::span<const double> times) {
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!(times[k] >= 0.0) || !std::isfinite(times[k])) {
      throw DomainError("propagate: times must be finite and non-negative");
    }
    if (k > 0 && times[k] < times[k - 1]) {
      throw DomainError("propagate: times must be ascending");
    }
  }
}

}  // namespace

void for_each_propagator(
    const Superoperator& generator, std::span<const double> times,
    const std::function<void(std::size_t, double, const ComplexMatrix&)>& visit) {
  check_times(times);
  if (times.empty()) return;
  const Eigen::Index n = generator.matrix.rows();
  if (generator.matrix.cols() != n) throw DimensionError("propagate: generator must be square");

  const bool stepped = times.size() > 2 && uniform_grid(times) && times[1] > times[0];
  if (!stepped) {
    for (std::size_t k = 0; k < times.size(); ++k) {
      const ComplexMatrix map = times[k] == 0.0 ? ComplexMatrix::Identity(n, n)
                                                : expm(times[k] * generator.matrix);
      visit(k, times[k], map);
    }
    return;
  }

  const double step = times[1] - times[0];
  const ComplexMatrix step_map = expm(step * generator.matrix);
  ComplexMatrix current = times[0] == 0.0 ? ComplexMatrix::Identity(n, n)
                                          : expm(times[0] * generator.matrix);
  ComplexMatrix scratch(n, n);
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (k > 0) {
      scratch.noalias() = step_map * current;
      current.swap(scratch);
    }
    visit(k, times[k], current);
  }
}

PropagatorFamily propagate(const Superoperator& generator, std::span<const double> times) {
  PropagatorFamily family;
  family.dim = generator.dim;
  family.picture = generator.picture;
  family.times.assign(times.begin(), times.end());
  family.maps.reserve(times.size());
  for_each_propagator(generator, times,
                      [&](std::size_t, double, const ComplexMatrix& map) {
                        family.maps.push_back(map);
                      });
  return family;
}

ComplexMatrix choi_matrix(const ComplexMatrix& state_map, int d) {
  const Eigen::Index dd = static_cast<Eigen::Index>(d) * d;
  if (state_map.rows() != dd || state_map.cols() != dd) {
    throw DimensionError("choi_matrix: map must be d^2 x d^2");
  }
  // Choi[(i,k),(j,l)] = E(|i><j|)[k,l] = map[(k,l),(i,j)].
  ComplexMatrix choi(dd, dd);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index k = 0; k < d; ++k) {
        for (Eigen::Index l = 0; l < d; ++l) {
          choi(i * d + k, j * d + l) = state_map(k * d + l, i * d + j);
        }
      }
    }
  }
  return choi;
}

CptpReport check_cptp(const Superoperator& generator, std::span<const double> t_samples) {
  CptpReport report;
  const int d = generator.dim;
  const ComplexVector vec_id = vectorize(identity(d));
  report.min_choi_eigenvalue = std::numeric_limits<double>::infinity();

  std::vector<double> times(t_samples.begin(), t_samples.end());
  std::sort(times.begin(), times.end());
  for (double t : times) {
    const ComplexMatrix map = t == 0.0 ? ComplexMatrix::Identity(d * d, d * d)
                                       : expm(t * generator.matrix);
    const ComplexMatrix adjoint_map =
        generator.picture == Picture::adjoint ? map : ComplexMatrix(map.adjoint());
    const ComplexMatrix state_map =
        generator.picture == Picture::state ? map : ComplexMatrix(map.adjoint());

    // Unitality of the adjoint map is trace preservation of the state map.
    double err = 0.0;
    if (generator.picture == Picture::adjoint) {
      err = (adjoint_map * vec_id - vec_id).cwiseAbs().maxCoeff();
    } else {
      err = (vec_id.adjoint() * state_map - vec_id.adjoint()).cwiseAbs().maxCoeff();
    }
    report.max_identity_error = std::max(report.max_identity_error, err);
    if (err > kUnitalityTolerance) {
      std::ostringstream msg;
      msg << (generator.picture == Picture::adjoint ? "unitality" : "trace preservation")
          << " violated at t=" << t << " (error " << err << ")";
      report.failures.push_back(msg.str());
    }

    const ComplexMatrix choi = choi_matrix(state_map, d);
    const ComplexMatrix herm = 0.5 * (choi + choi.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    report.min_choi_eigenvalue = std::min(report.min_choi_eigenvalue, min_eig);
    if (min_eig < -kChoiTolerance) {
      std::ostringstream msg;
      msg << "Choi matrix not positive at t=" << t << " (min eigenvalue " << min_eig << ")";
      report.failures.push_back(msg.str());
    }
  }
  report.passed = report.failures.empty();
  return report;
}

}  // namespace bipotoc
