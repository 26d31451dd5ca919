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

// Slow, direct reference implementations used only to cross-check the
// library. Everything here is built from definitions, with no shared code
// paths beyond kron and the model builders.

#include "bipotoc/tensor.hpp"

namespace oracle {

using bipotoc::ComplexMatrix;

// Swap operators from explicit kets on A (x) B (x) A' (x) B'.
struct DenseSwaps {
  ComplexMatrix s;
  ComplexMatrix s_aa;
  ComplexMatrix s_bb;
};
DenseSwaps dense_swaps(int dim_a, int dim_b);

// The d^4 x d^4 superoperator of E^dag (x) E^dag on row-stacked operators of
// the doubled space, built column by column from images of matrix units.
ComplexMatrix two_copy_map(const ComplexMatrix& adjoint_map);

// Open-system OTOC with the two-copy map materialized.
double dense_open_otoc(const ComplexMatrix& adjoint_map, int dim_a, int dim_b);

// Unitary OTOC with U (x) U materialized.
double dense_unitary_otoc(const ComplexMatrix& u, int dim_a, int dim_b);

// Matrix exponential through Eigen's unsupported MatrixFunctions module.
ComplexMatrix reference_expm(const ComplexMatrix& m);

// exp(-iHt) from a complex eigendecomposition of H.
ComplexMatrix eigen_propagator(const ComplexMatrix& h, double t);

// Partial trace over the second factor of A (x) B by explicit summation.
ComplexMatrix trace_out_b(const ComplexMatrix& m, int dim_a, int dim_b);
ComplexMatrix trace_out_a(const ComplexMatrix& m, int dim_a, int dim_b);

}  // namespace oracle
