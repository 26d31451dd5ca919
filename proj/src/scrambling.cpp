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

#include "bipotoc/scrambling.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace bipotoc {
namespace {

constexpr double kImaginaryResidueTolerance = 1e-10;

ComplexMatrix permutation_matrix(const std::vector<Eigen::Index>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) m(r, perm[static_cast<std::size_t>(r)]) = 1.0;
  return m;
}

double real_or_throw(Complex value, const char* what) {
  if (std::abs(value.imag()) > kImaginaryResidueTolerance) {
    std::ostringstream msg;
    msg << what << ": imaginary residue " << value.imag() << " exceeds tolerance";
    throw NumericalError(msg.str());
  }
  return value.real();
}

}  // namespace

SwapSet::SwapSet(BipartiteSpace space) : space_(space) {
  const Eigen::Index da = space.dim_a;
  const Eigen::Index db = space.dim_b;
  const Eigen::Index d = da * db;
  const auto n = static_cast<std::size_t>(d * d);
  full_.resize(n);
  a_.resize(n);
  b_.resize(n);
  auto flat = [&](Eigen::Index a, Eigen::Index b, Eigen::Index a2, Eigen::Index b2) {
    return (a * db + b) * d + a2 * db + b2;
  };
  for (Eigen::Index a = 0; a < da; ++a) {
    for (Eigen::Index b = 0; b < db; ++b) {
      for (Eigen::Index a2 = 0; a2 < da; ++a2) {
        for (Eigen::Index b2 = 0; b2 < db; ++b2) {
          const auto row = static_cast<std::size_t>(flat(a, b, a2, b2));
          full_[row] = flat(a2, b2, a, b);  // |a b a' b'><a' b' a b|
          a_[row] = flat(a2, b, a, b2);     // |a b a' b'><a' b a b'|
          b_[row] = flat(a, b2, a2, b);     // |a b a' b'><a b' a' b|
        }
      }
    }
  }
}

Eigen::Index SwapSet::doubled_dim() const noexcept {
  return static_cast<Eigen::Index>(full_.size());
}

ComplexMatrix SwapSet::full() const { return permutation_matrix(full_); }
ComplexMatrix SwapSet::a_swap() const { return permutation_matrix(a_); }
ComplexMatrix SwapSet::b_swap() const { return permutation_matrix(b_); }

SwapSet build_swaps(BipartiteSpace space) { return SwapSet(space); }

Complex permutation_trace(const std::vector<Eigen::Index>& perm, const ComplexMatrix& x) {
  if (x.rows() != static_cast<Eigen::Index>(perm.size()) || x.cols() != x.rows()) {
    throw DimensionError("permutation_trace: size mismatch");
  }
  // Tr(P X) = sum_r X(perm[r], r).
  Complex acc{0.0, 0.0};
  for (std::size_t r = 0; r < perm.size(); ++r) {
    acc += x(perm[r], static_cast<Eigen::Index>(r));
  }
  return acc;
}

double otoc_of_unitary(const ComplexMatrix& u, BipartiteSpace space) {
  const Eigen::Index da = space.dim_a;
  const Eigen::Index db = space.dim_b;
  const Eigen::Index d = space.dim();
  if (u.rows() != d || u.cols() != d) throw DimensionError("otoc_of_unitary: size mismatch");

  // Tr(S_AA' K S_AA' K^dag) with K = U (x) U, summed over rows (a,b,a',b') of K.
  // For fixed rows the column sum factorizes into Tr(R1 R3^dag R2 R4^dag), where
  // R is a row of U reshaped to d_A x d_B and
  //   R1 = U[(a',b)], R2 = U[(a,b')], R3 = U[(a,b)], R4 = U[(a',b')].
  std::vector<ComplexMatrix> rows(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    ComplexMatrix r(da, db);
    for (Eigen::Index c = 0; c < da; ++c) {
      for (Eigen::Index e = 0; e < db; ++e) r(c, e) = u(i, c * db + e);
    }
    rows[static_cast<std::size_t>(i)] = std::move(r);
  }
  auto row = [&](Eigen::Index a, Eigen::Index b) -> const ComplexMatrix& {
    return rows[static_cast<std::size_t>(a * db + b)];
  };
  Complex total{0.0, 0.0};
  ComplexMatrix m13(da, da);
  ComplexMatrix m24(da, da);
  for (Eigen::Index a = 0; a < da; ++a) {
    for (Eigen::Index a2 = 0; a2 < da; ++a2) {
      for (Eigen::Index b = 0; b < db; ++b) {
        m13.noalias() = row(a2, b) * row(a, b).adjoint();
        for (Eigen::Index b2 = 0; b2 < db; ++b2) {
          m24.noalias() = row(a, b2) * row(a2, b2).adjoint();
          total += (m13.transpose().cwiseProduct(m24)).sum();
        }
      }
    }
  }
  const double dd = static_cast<double>(d) * static_cast<double>(d);
  return 1.0 - total.real() / dd;
}

UnitaryEvolution::UnitaryEvolution(const ComplexMatrix& hamiltonian)
    : eig_(herm_eig(hamiltonian)) {}

ComplexMatrix UnitaryEvolution::at(double t) const {
  const ComplexVector phases =
      (eig_.values.cast<Complex>() * Complex(0.0, -t)).array().exp().matrix();
  return eig_.vectors * phases.asDiagonal() * eig_.vectors.adjoint();
}

OtocSeries otoc_unitary(const ComplexMatrix& hamiltonian, BipartiteSpace space,
                        std::span<const double> times) {
  if (hamiltonian.rows() != space.dim()) {
    throw DimensionError("otoc_unitary: Hamiltonian does not match the bipartition");
  }
  const UnitaryEvolution evolution(hamiltonian);
  OtocSeries series;
  series.kind = OtocKind::unitary;
  series.times.assign(times.begin(), times.end());
  series.values.reserve(times.size());
  for (double t : times) series.values.push_back(otoc_of_unitary(evolution.at(t), space));
  return series;
}

namespace {

double otoc_of_channel_with(const ComplexMatrix& adjoint_map, const SwapSet& swaps,
                            const ComplexMatrix& a_swap) {
  const ComplexMatrix once = apply_factorwise(adjoint_map, a_swap, FactorCopy::first);
  const ComplexMatrix twice = apply_factorwise(adjoint_map, once, FactorCopy::second);
  const auto db = static_cast<double>(swaps.space().dim_b);
  const auto d = static_cast<double>(swaps.space().dim());
  const Complex value =
      (db * permutation_trace(swaps.full_perm(), twice) - permutation_trace(swaps.a_perm(), twice)) /
      (d * d);
  return real_or_throw(value, "otoc_open");
}

}  // namespace

double otoc_of_channel(const ComplexMatrix& adjoint_map, const SwapSet& swaps) {
  return otoc_of_channel_with(adjoint_map, swaps, swaps.a_swap());
}

OtocSeries otoc_open(const PropagatorFamily& props, BipartiteSpace space) {
  if (props.picture != Picture::adjoint) {
    throw DomainError("otoc_open: propagators must be in the adjoint picture");
  }
  if (props.dim != space.dim()) throw DimensionError("otoc_open: propagator dimension mismatch");
  const SwapSet swaps(space);
  const ComplexMatrix a_swap = swaps.a_swap();
  OtocSeries series;
  series.kind = OtocKind::open;
  series.times = props.times;
  for (const auto& map : props.maps) {
    series.values.push_back(otoc_of_channel_with(map, swaps, a_swap));
  }
  return series;
}

OtocSeries otoc_open(const Superoperator& adjoint_generator, BipartiteSpace space,
                     std::span<const double> times) {
  if (adjoint_generator.picture != Picture::adjoint) {
    throw DomainError("otoc_open: generator must be in the adjoint picture");
  }
  if (adjoint_generator.dim != space.dim()) {
    throw DimensionError("otoc_open: generator dimension mismatch");
  }
  const SwapSet swaps(space);
  const ComplexMatrix a_swap = swaps.a_swap();
  OtocSeries series;
  series.kind = OtocKind::open;
  series.times.assign(times.begin(), times.end());
  series.values.resize(times.size());
  for_each_propagator(adjoint_generator, times,
                      [&](std::size_t k, double, const ComplexMatrix& map) {
                        series.values[k] = otoc_of_channel_with(map, swaps, a_swap);
                      });
  return series;
}

double squared_commutator_sample(const ComplexMatrix& evolved_va, const ComplexMatrix& wb) {
  const ComplexMatrix comm = evolved_va * wb - wb * evolved_va;
  return comm.squaredNorm() / (2.0 * static_cast<double>(evolved_va.rows()));
}

namespace {

struct HaarPairs {
  std::vector<ComplexMatrix> va;
  std::vector<ComplexMatrix> wb;
};

HaarPairs sample_pairs(BipartiteSpace space, int n_pairs, std::uint64_t seed) {
  if (n_pairs < 1) throw DomainError("otoc_haar_mc: n_pairs must be at least 1");
  Rng rng(seed);
  const ComplexMatrix ia = ComplexMatrix::Identity(space.dim_a, space.dim_a);
  const ComplexMatrix ib = ComplexMatrix::Identity(space.dim_b, space.dim_b);
  HaarPairs pairs;
  for (int k = 0; k < n_pairs; ++k) {
    const ComplexMatrix v = haar_unitary(space.dim_a, rng);
    const ComplexMatrix w = haar_unitary(space.dim_b, rng);
    pairs.va.push_back(kron(v, ib));
    pairs.wb.push_back(kron(ia, w));
  }
  return pairs;
}

template <typename Evolve>
void mc_point(const HaarPairs& pairs, Evolve&& evolve, double& mean, double& stderr_out) {
  const auto n = static_cast<double>(pairs.va.size());
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t k = 0; k < pairs.va.size(); ++k) {
    const double s = squared_commutator_sample(evolve(pairs.va[k]), pairs.wb[k]);
    sum += s;
    sum_sq += s * s;
  }
  mean = sum / n;
  if (pairs.va.size() > 1) {
    const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
    stderr_out = std::sqrt(var / n);
  } else {
    stderr_out = 0.0;
  }
}

}  // namespace

OtocSeries otoc_haar_mc(const ComplexMatrix& hamiltonian, BipartiteSpace space,
                        std::span<const double> times, int n_pairs, std::uint64_t seed) {
  if (hamiltonian.rows() != space.dim()) {
    throw DimensionError("otoc_haar_mc: Hamiltonian does not match the bipartition");
  }
  const HaarPairs pairs = sample_pairs(space, n_pairs, seed);
  const UnitaryEvolution evolution(hamiltonian);
  OtocSeries series;
  series.kind = OtocKind::haar_mc;
  series.samples = n_pairs;
  series.times.assign(times.begin(), times.end());
  series.values.resize(times.size());
  series.stderrs.resize(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    const ComplexMatrix u = evolution.at(times[k]);
    mc_point(
        pairs, [&](const ComplexMatrix& va) -> ComplexMatrix { return u.adjoint() * va * u; },
        series.values[k], series.stderrs[k]);
  }
  return series;
}

OtocSeries otoc_haar_mc(const Superoperator& adjoint_generator, BipartiteSpace space,
                        std::span<const double> times, int n_pairs, std::uint64_t seed) {
  if (adjoint_generator.picture != Picture::adjoint) {
    throw DomainError("otoc_haar_mc: generator must be in the adjoint picture");
  }
  if (adjoint_generator.dim != space.dim()) {
    throw DimensionError("otoc_haar_mc: generator dimension mismatch");
  }
  const HaarPairs pairs = sample_pairs(space, n_pairs, seed);
  OtocSeries series;
  series.kind = OtocKind::haar_mc;
  series.samples = n_pairs;
  series.times.assign(times.begin(), times.end());
  series.values.resize(times.size());
  series.stderrs.resize(times.size());
  for_each_propagator(adjoint_generator, times,
                      [&](std::size_t k, double, const ComplexMatrix& map) {
                        mc_point(
                            pairs,
                            [&](const ComplexMatrix& va) { return apply_map(map, va); },
                            series.values[k], series.stderrs[k]);
                      });
  return series;
}

double operator_entanglement_of(const ComplexMatrix& u, BipartiteSpace space) {
  const Eigen::Index d = space.dim();
  if (u.rows() != d || u.cols() != d) {
    throw DimensionError("operator_entanglement: size mismatch");
  }
  // |U> = (U (x) I) (1/sqrt d) sum_j |j>|j> has amplitude U(i, j)/sqrt(d) at i*d + j.
  ComplexVector state(d * d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) state(i * d + j) = u(i, j) * norm;
  }
  const int dims[] = {space.dim_a, space.dim_b, space.dim_a, space.dim_b};
  const int keep[] = {0, 2};
  const ComplexMatrix sigma = partial_trace(state, dims, keep);
  const Complex purity = (sigma * sigma).trace();
  return 1.0 - purity.real();
}

std::vector<double> operator_entanglement(const ComplexMatrix& hamiltonian,
                                          BipartiteSpace space,
                                          std::span<const double> times) {
  if (hamiltonian.rows() != space.dim()) {
    throw DimensionError("operator_entanglement: Hamiltonian does not match the bipartition");
  }
  const UnitaryEvolution evolution(hamiltonian);
  std::vector<double> values;
  values.reserve(times.size());
  for (double t : times) values.push_back(operator_entanglement_of(evolution.at(t), space));
  return values;
}

}  // namespace bipotoc
