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

// Swap operators, Haar-averaged bipartite OTOCs (unitary, open, Monte Carlo)
// and operator entanglement.
//
// Operators on the doubled space H (x) H' = A (x) B (x) A' (x) B' use the
// composite index ((a * d_B + b) * d + a' * d_B + b'), A slowest.

#include <cstdint>
#include <span>
#include <vector>

#include "bipotoc/liouville.hpp"
#include "bipotoc/tensor.hpp"

namespace bipotoc {

// S, S_AA' and S_BB' are permutation matrices. They are stored as index
// maps (row r has its single 1 in column perm[r]) and materialized on
// request, since at d = 128 a dense d^2 x d^2 copy would not fit in memory.
class SwapSet {
 public:
  explicit SwapSet(BipartiteSpace space);

  const BipartiteSpace& space() const noexcept { return space_; }
  Eigen::Index doubled_dim() const noexcept;

  const std::vector<Eigen::Index>& full_perm() const noexcept { return full_; }
  const std::vector<Eigen::Index>& a_perm() const noexcept { return a_; }
  const std::vector<Eigen::Index>& b_perm() const noexcept { return b_; }

  ComplexMatrix full() const;    // S
  ComplexMatrix a_swap() const;  // S_AA'
  ComplexMatrix b_swap() const;  // S_BB'

 private:
  BipartiteSpace space_;
  std::vector<Eigen::Index> full_;
  std::vector<Eigen::Index> a_;
  std::vector<Eigen::Index> b_;
};

SwapSet build_swaps(BipartiteSpace space);

// Tr(P X) for a permutation matrix P given by its index map.
Complex permutation_trace(const std::vector<Eigen::Index>& perm, const ComplexMatrix& x);

enum class OtocKind { unitary, open, haar_mc };

struct OtocSeries {
  OtocKind kind = OtocKind::unitary;
  std::vector<double> times;
  std::vector<double> values;
  std::vector<double> stderrs;  // haar_mc only
  int samples = 0;              // haar_mc only
};

// 1 - Tr(S_AA' U^{(x)2} S_AA' U^{dag(x)2}) / d^2 for a single unitary.
double otoc_of_unitary(const ComplexMatrix& u, BipartiteSpace space);

// U_t = exp(-iHt) from the Hermitian eigendecomposition of H.
class UnitaryEvolution {
 public:
  explicit UnitaryEvolution(const ComplexMatrix& hamiltonian);
  ComplexMatrix at(double t) const;
  int dim() const noexcept { return static_cast<int>(eig_.values.size()); }

 private:
  HermitianEigen eig_;
};

OtocSeries otoc_unitary(const ComplexMatrix& hamiltonian, BipartiteSpace space,
                        std::span<const double> times);

// Tr[(d_B S - S_AA') (E^dag (x) E^dag)(S_AA')] / d^2 for one adjoint map,
// applying E^dag to each copy of S_AA' in turn.
double otoc_of_channel(const ComplexMatrix& adjoint_map, const SwapSet& swaps);

OtocSeries otoc_open(const PropagatorFamily& props, BipartiteSpace space);

// Streams propagators so that only one d^2 x d^2 map is alive at a time.
OtocSeries otoc_open(const Superoperator& adjoint_generator, BipartiteSpace space,
                     std::span<const double> times);

inline constexpr int kDefaultMcPairs = 200;

// Monte-Carlo estimate of (1/2d) E_{V,W} ||[E^dag(V (x) I), I (x) W]||_2^2.
// The same n_pairs Haar pairs (V on A, W on B) are reused at every time.
OtocSeries otoc_haar_mc(const ComplexMatrix& hamiltonian, BipartiteSpace space,
                        std::span<const double> times, int n_pairs, std::uint64_t seed);
OtocSeries otoc_haar_mc(const Superoperator& adjoint_generator, BipartiteSpace space,
                        std::span<const double> times, int n_pairs, std::uint64_t seed);

// One sample of the squared-commutator estimator for an already evolved V_A.
double squared_commutator_sample(const ComplexMatrix& evolved_va, const ComplexMatrix& wb);

// 1 - Tr(sigma_U^2), sigma_U = Tr_{BB'} |U><U|, |U> = (U (x) I)|psi+>.
double operator_entanglement_of(const ComplexMatrix& u, BipartiteSpace space);

std::vector<double> operator_entanglement(const ComplexMatrix& hamiltonian,
                                          BipartiteSpace space,
                                          std::span<const double> times);

}  // namespace bipotoc
