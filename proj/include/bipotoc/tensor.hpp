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

// Dense complex linear algebra shared by every other module.
//
// Index conventions (normative across the library):
//  * A composite space H_A (x) H_B uses i = a * d_B + b, so kron(X_A, X_B)
//    places A on the left.
//  * Operators are vectorized by row stacking: vec(|i><j|) = |i> (x) |j>,
//    i.e. vec(M)[i * cols + j] = M(i, j). Under this convention
//    vec(A X B) = (A (x) B^T) vec(X).

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bipotoc/errors.hpp"

namespace bipotoc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kPsdClamp = 1e-12;
inline constexpr double kNegativeEigenvalueTolerance = 1e-10;

// H = H_A (x) H_B with A as the slow index.
struct BipartiteSpace {
  int dim_a = 1;
  int dim_b = 1;

  BipartiteSpace() = default;
  BipartiteSpace(int a, int b);

  int dim() const noexcept { return dim_a * dim_b; }
  int index(int a, int b) const noexcept { return a * dim_b + b; }

  friend bool operator==(const BipartiteSpace&, const BipartiteSpace&) = default;
};

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y);

// Largest absolute entry of M - M^dagger.
double hermiticity_defect(const ComplexMatrix& m);

// Throws NotHermitianError unless ||M - M^dagger||_max <= tol * max(1, ||M||_max).
void require_hermitian(const ComplexMatrix& m, const char* what = "matrix",
                       double tol = kHermitianTolerance);

// Reduced matrix on the factors listed in `keep` (0-based factor indices,
// any order; the result follows the original factor order).
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep);

// Same reduction applied to the pure state |psi><psi| without forming it.
ComplexMatrix partial_trace(const ComplexVector& psi, std::span<const int> dims,
                            std::span<const int> keep);

ComplexVector vectorize(const ComplexMatrix& m);
ComplexMatrix devectorize(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols);

struct ExpmOptions {
  int max_squarings = 64;
};

// Matrix exponential by scaling and squaring with diagonal Pade approximants
// of degree 3, 5, 7, 9 or 13 chosen from the 1-norm.
ComplexMatrix expm(const ComplexMatrix& m, const ExpmOptions& options = {});

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // unitary, columns are eigenvectors
};

HermitianEigen herm_eig(const ComplexMatrix& m);

// Matrix logarithm of a positive semidefinite matrix restricted to its
// support. Eigenvalues below `clamp` count as zero and are excluded.
struct PsdLog {
  ComplexMatrix log;
  RealVector eigenvalues;     // clamped to >= 0
  ComplexMatrix eigenvectors;
  std::vector<bool> in_support;
};

PsdLog log_psd(const ComplexMatrix& m, double clamp = kPsdClamp);

ComplexMatrix haar_unitary(int dim, Rng& rng);
ComplexMatrix haar_unitary(int dim, std::uint64_t seed);

enum class FactorCopy { first, second };

// Applies a d^2 x d^2 map (acting on row-stacked d x d operators) to one
// copy of an operator on H (x) H' with dim H = dim H' = d, without forming
// the d^4 x d^4 two-copy map.
ComplexMatrix apply_factorwise(const ComplexMatrix& map, const ComplexMatrix& target,
                               FactorCopy copy);

// Index realignment T[(i,i'),(j,j')] <-> R[(i,j),(i',j')] for operators on
// H (x) H' with dim H = dim H' = d. It is its own inverse.
ComplexMatrix realign(const ComplexMatrix& target, int d);

// Integer square root of a perfect square, or -1.
int exact_sqrt(Eigen::Index n);

}  // namespace bipotoc
