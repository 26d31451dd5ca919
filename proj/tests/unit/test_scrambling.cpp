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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bipotoc/liouville.hpp"
#include "bipotoc/models.hpp"
#include "bipotoc/operators.hpp"
#include "bipotoc/scrambling.hpp"
#include "oracles.hpp"

using namespace bipotoc;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

ComplexMatrix random_hermitian(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = Complex(g(rng), g(rng));
  return m + m.adjoint();
}

// E^dag(X) = U^dag X U on row-stacked operators.
ComplexMatrix unitary_adjoint_map(const ComplexMatrix& u) { return kron(u.adjoint(), u.transpose()); }

ComplexMatrix swap_gate() {
  ComplexMatrix s = ComplexMatrix::Zero(4, 4);
  s(0, 0) = s(3, 3) = s(1, 2) = s(2, 1) = 1.0;
  return s;
}

ComplexMatrix cnot_gate() {
  ComplexMatrix c = ComplexMatrix::Zero(4, 4);
  c(0, 0) = c(1, 1) = c(2, 3) = c(3, 2) = 1.0;
  return c;
}

}  // namespace

TEST_CASE("swap operators match the ket-by-ket construction") {
  for (auto [da, db] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 2}}) {
    const SwapSet s(BipartiteSpace(da, db));
    const oracle::DenseSwaps o = oracle::dense_swaps(da, db);
    CHECK(max_abs(s.full() - o.s) == 0.0);
    CHECK(max_abs(s.a_swap() - o.s_aa) == 0.0);
    CHECK(max_abs(s.b_swap() - o.s_bb) == 0.0);
    CHECK(s.doubled_dim() == da * da * db * db);
  }
}

TEST_CASE("swap traces") {
  const SwapSet s(BipartiteSpace(2, 3));
  const ComplexMatrix id = ComplexMatrix::Identity(36, 36);
  CHECK(permutation_trace(s.full_perm(), id).real() == 6.0);
  CHECK(permutation_trace(s.a_perm(), id).real() == 18.0);
  CHECK(permutation_trace(s.b_perm(), id).real() == 12.0);
  const ComplexMatrix x = random_hermitian(36, 3);
  CHECK(std::abs(permutation_trace(s.a_perm(), x) - (s.a_swap() * x).trace()) < 1e-12);
  CHECK_THROWS_AS(permutation_trace(s.a_perm(), ComplexMatrix::Identity(5, 5)), DimensionError);
}

TEST_CASE("unitary OTOC of reference gates") {
  const BipartiteSpace qubits(2, 2);
  CHECK(std::abs(otoc_of_unitary(ComplexMatrix::Identity(4, 4), qubits)) < 1e-15);
  CHECK(otoc_of_unitary(swap_gate(), qubits) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(otoc_of_unitary(cnot_gate(), qubits) == doctest::Approx(0.5).epsilon(1e-14));
  const ComplexMatrix local = kron(haar_unitary(2, std::uint64_t{1}), haar_unitary(2, std::uint64_t{2}));
  CHECK(std::abs(otoc_of_unitary(local, qubits)) < 1e-14);
}

TEST_CASE("unitary OTOC matches the materialized formula") {
  for (auto [da, db] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const ComplexMatrix u = haar_unitary(da * db, static_cast<std::uint64_t>(da * 10 + db));
    CHECK(std::abs(otoc_of_unitary(u, BipartiteSpace(da, db)) - oracle::dense_unitary_otoc(u, da, db)) < 1e-13);
  }
}

TEST_CASE("operator entanglement of reference gates and its equality with G") {
  const BipartiteSpace qubits(2, 2);
  CHECK(operator_entanglement_of(swap_gate(), qubits) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(operator_entanglement_of(cnot_gate(), qubits) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(operator_entanglement_of(ComplexMatrix::Identity(4, 4), qubits)) < 1e-15);
  const BipartiteSpace sp(2, 3);
  const ComplexMatrix h = random_hermitian(6, 9);
  const std::vector<double> times{0.0, 0.4, 1.1, 3.0};
  const OtocSeries g = otoc_unitary(h, sp, times);
  const std::vector<double> e = operator_entanglement(h, sp, times);
  for (std::size_t k = 0; k < times.size(); ++k) CHECK(std::abs(g.values[k] - e[k]) < 1e-13);
}

TEST_CASE("open OTOC of a unitary channel equals the unitary OTOC") {
  const BipartiteSpace sp(2, 3);
  const SwapSet swaps(sp);
  const ComplexMatrix u = haar_unitary(6, std::uint64_t{5});
  CHECK(std::abs(otoc_of_channel(unitary_adjoint_map(u), swaps) - otoc_of_unitary(u, sp)) < 1e-13);
}

TEST_CASE("completely depolarizing channel gives zero") {
  // E^dag(X) = Tr(X) I / d.
  const int d = 4;
  const ComplexVector vid = vectorize(ComplexMatrix::Identity(d, d));
  const ComplexMatrix map = vid * vid.adjoint() / static_cast<double>(d);
  CHECK(std::abs(otoc_of_channel(map, SwapSet(BipartiteSpace(2, 2)))) < 1e-14);
}

TEST_CASE("open OTOC matches the dense two-copy oracle for an open Ising pair") {
  IsingParams p;
  p.n_spins = 2;
  p.theta = 0.9;
  p.temperatures = {0.5};
  const ModelSpec m = build_ising(p, 0.2);
  const Superoperator l = build_adjoint_liouvillian(m);
  for (double t : {0.2, 1.0, 4.0}) {
    const ComplexMatrix map = expm(t * l.matrix);
    CHECK(std::abs(otoc_of_channel(map, SwapSet(m.space)) - oracle::dense_open_otoc(map, 2, 2)) < 1e-12);
  }
}

TEST_CASE("imaginary residue is reported") {
  const ComplexMatrix u = haar_unitary(4, std::uint64_t{6});
  const ComplexMatrix map = std::exp(Complex(0.0, 0.3)) * unitary_adjoint_map(u);
  CHECK_THROWS_AS(otoc_of_channel(map, SwapSet(BipartiteSpace(2, 2))), NumericalError);
}

TEST_CASE("streamed and materialized open OTOCs agree") {
  AtomFieldParams p;
  p.gamma = p.kappa = 0.05;
  const ModelSpec m = build_dicke(p);
  const Superoperator l = build_adjoint_liouvillian(m);
  std::vector<double> times;
  for (int k = 0; k < 12; ++k) times.push_back(0.5 * k);
  const OtocSeries a = otoc_open(l, m.space, times);
  const OtocSeries b = otoc_open(propagate(l, times), m.space);
  for (std::size_t k = 0; k < times.size(); ++k) CHECK(std::abs(a.values[k] - b.values[k]) < 1e-14);
  CHECK(std::abs(a.values[0]) < 1e-14);
  CHECK_THROWS_AS(otoc_open(build_state_liouvillian(m), m.space, times), DomainError);
  CHECK_THROWS_AS(otoc_open(l, BipartiteSpace(3, 2), times), DimensionError);
}

TEST_CASE("Monte-Carlo estimator") {
  const BipartiteSpace sp(2, 2);
  const ComplexMatrix h = random_hermitian(4, 11);
  const std::vector<double> times{0.0, 0.7, 2.0};
  const OtocSeries mc = otoc_haar_mc(h, sp, times, 2000, 3);
  const OtocSeries exact = otoc_unitary(h, sp, times);
  CHECK(mc.samples == 2000);
  CHECK(mc.values[0] < 1e-20);
  CHECK(mc.stderrs[0] < 1e-20);
  for (std::size_t k = 1; k < times.size(); ++k) {
    CHECK(mc.stderrs[k] > 0.0);
    CHECK(std::abs(mc.values[k] - exact.values[k]) < 4.0 * mc.stderrs[k]);
  }
  const OtocSeries again = otoc_haar_mc(h, sp, times, 2000, 3);
  CHECK(again.values == mc.values);
  CHECK_THROWS_AS(otoc_haar_mc(h, sp, times, 0, 3), DomainError);
}

TEST_CASE("squared commutator sample of commuting operators vanishes") {
  const ComplexMatrix va = kron(pauli(Pauli::x), ComplexMatrix::Identity(2, 2));
  const ComplexMatrix wb = kron(ComplexMatrix::Identity(2, 2), pauli(Pauli::y));
  CHECK(squared_commutator_sample(va, wb) == 0.0);
}

TEST_CASE("unitary evolution") {
  const ComplexMatrix h = random_hermitian(5, 12);
  const UnitaryEvolution ev(h);
  CHECK(ev.dim() == 5);
  CHECK(max_abs(ev.at(1.7) - oracle::eigen_propagator(h, 1.7)) < 1e-12);
  CHECK(max_abs(ev.at(0.0) - ComplexMatrix::Identity(5, 5)) < 1e-14);
}
