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

// Vectorized GKSL generators and their propagators.
//
// With row-stacked vectorization the adjoint generator is
//   L^dag = i (H (x) I - I (x) H^T)
//         + sum_k g_k [ L_k^dag (x) L_k^T - 1/2 (L_k^dag L_k (x) I + I (x) (L_k^dag L_k)^T) ]
// so that devec(L^dag vec O) = i[H, O] + sum_k g_k (L_k^dag O L_k - 1/2 {L_k^dag L_k, O}).
// The state-picture generator is its Hilbert-Schmidt adjoint.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bipotoc/models.hpp"
#include "bipotoc/tensor.hpp"

namespace bipotoc {

enum class Picture { adjoint, state };

struct Superoperator {
  int dim = 0;  // operators are dim x dim; matrix is dim^2 x dim^2
  ComplexMatrix matrix;
  Picture picture = Picture::adjoint;
};

Superoperator build_adjoint_liouvillian(const ModelSpec& model);
Superoperator build_state_liouvillian(const ModelSpec& model);

// Switches picture by taking the Hilbert-Schmidt adjoint of the matrix.
Superoperator dual(const Superoperator& s);

// devec(map * vec(op)) for a d^2 x d^2 map.
ComplexMatrix apply_map(const ComplexMatrix& map, const ComplexMatrix& op);

struct PropagatorFamily {
  int dim = 0;
  Picture picture = Picture::adjoint;
  std::vector<double> times;
  std::vector<ComplexMatrix> maps;
};

// True when the grid is equally spaced to within floating-point slack.
bool uniform_grid(std::span<const double> times);

// Calls `visit(index, t, e^{t L})` for every time in order. Uniform grids
// reuse powers of e^{dt L}; other grids fall back to one expm per time.
// Only one propagator is alive at a time.
void for_each_propagator(
    const Superoperator& generator, std::span<const double> times,
    const std::function<void(std::size_t, double, const ComplexMatrix&)>& visit);

// Materializes every propagator; memory grows as times.size() * d^4.
PropagatorFamily propagate(const Superoperator& generator, std::span<const double> times);

struct CptpReport {
  bool passed = true;
  double max_identity_error = 0.0;  // unitality (adjoint) / trace preservation (state)
  double min_choi_eigenvalue = 0.0;
  std::vector<std::string> failures;
};

// Choi matrix sum_ij |i><j| (x) E(|i><j|) of a state-picture map.
ComplexMatrix choi_matrix(const ComplexMatrix& state_map, int d);

// Unitality of the adjoint propagator, trace preservation of the state
// propagator, and Choi positivity (min eigenvalue >= -1e-8) at each sample.
CptpReport check_cptp(const Superoperator& generator, std::span<const double> t_samples);

}  // namespace bipotoc
