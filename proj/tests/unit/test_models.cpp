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

#include "bipotoc/models.hpp"
#include "bipotoc/operators.hpp"

using namespace bipotoc;

namespace {
double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

const JumpOperator* find_jump(const ModelSpec& m, const std::string& label) {
  for (const auto& j : m.jumps)
    if (j.label == label) return &j;
  return nullptr;
}
}  // namespace

TEST_CASE("thermal occupation") {
  CHECK(thermal_occupation(2.0, 0.0) == 0.0);
  CHECK(thermal_occupation(2.0, 1.0) == doctest::Approx(1.0 / (std::exp(2.0) - 1.0)).epsilon(1e-14));
  CHECK(thermal_occupation(1.0, 1e6) == doctest::Approx(1e6 - 0.5).epsilon(1e-9));
  CHECK_THROWS_AS(thermal_occupation(1.0, -1.0), ValidationError);
}

TEST_CASE("Dicke Hamiltonian and dissipators") {
  AtomFieldParams p;
  p.coupling = 1.0;
  p.gamma = 0.05;
  p.kappa = 0.05;
  p.temperature_a = 1.0;
  p.temperature_b = 2.0;
  const ModelSpec m = build_dicke(p);
  REQUIRE(m.space.dim_a == 3);
  REQUIRE(m.space.dim_b == 3);
  CHECK(m.kind == ModelKind::dicke);
  CHECK(hermiticity_defect(m.hamiltonian) == 0.0);

  const SpinOperators s = collective_spin(1.0);
  const BosonOperators b = boson_ops(3);
  const ComplexMatrix ia = ComplexMatrix::Identity(3, 3);
  const ComplexMatrix expected = 2.0 * kron(s.jz, ia) + 2.0 * kron(ia, b.num) +
                                 (1.0 / std::sqrt(2.0)) * kron(s.jx, b.a + b.a_dag);
  CHECK(max_abs(m.hamiltonian - expected) < 1e-14);

  REQUIRE(m.jumps.size() == 4);
  const double na = 1.0 / (std::exp(2.0) - 1.0);
  const double nb = 1.0 / (std::exp(1.0) - 1.0);
  CHECK(find_jump(m, "J-")->rate == doctest::Approx(0.05 * (na + 1)));
  CHECK(find_jump(m, "J+")->rate == doctest::Approx(0.05 * na));
  CHECK(find_jump(m, "a")->rate == doctest::Approx(0.05 * (nb + 1)));
  CHECK(find_jump(m, "a+")->rate == doctest::Approx(0.05 * nb));
}

TEST_CASE("zero temperature drops the absorption channels; zero rates drop everything") {
  AtomFieldParams p;
  p.gamma = 0.05;
  p.kappa = 0.05;
  CHECK(build_dicke(p).jumps.size() == 2);
  p.gamma = p.kappa = 0.0;
  CHECK_FALSE(build_dicke(p).dissipative());
}

TEST_CASE("Tavis-Cummings conserves the excitation number") {
  AtomFieldParams p;
  p.coupling = 2.0;
  p.n_max = 4;
  const ModelSpec m = build_tc(p);
  const SpinOperators s = collective_spin(1.0);
  const BosonOperators b = boson_ops(4);
  const ComplexMatrix n = kron(s.jz, ComplexMatrix::Identity(4, 4)) + kron(ComplexMatrix::Identity(3, 3), b.num);
  CHECK(max_abs(commutator(m.hamiltonian, n)) < 1e-13);
  AtomFieldParams q = p;
  const ModelSpec dicke = build_dicke(q);
  CHECK(max_abs(commutator(dicke.hamiltonian, n)) > 1e-3);
}

TEST_CASE("Dicke critical coupling") { CHECK(dicke_critical_coupling(2.0, 2.0) == doctest::Approx(1.0)); }

TEST_CASE("atom-field validation") {
  AtomFieldParams p;
  p.n_max = 1;
  CHECK_THROWS_AS(build_dicke(p), ValidationError);
  p = AtomFieldParams{};
  p.gamma = -0.1;
  CHECK_THROWS_AS(build_dicke(p), ValidationError);
  p = AtomFieldParams{};
  p.omega0 = 0.0;
  CHECK_THROWS_AS(build_tc(p), ValidationError);
}

TEST_CASE("Ising Hamiltonian for two spins") {
  IsingParams p;
  p.n_spins = 2;
  p.split = 1;
  p.field = 0.7;
  p.coupling = 0.3;
  p.theta = 0.4;
  const ModelSpec m = build_ising(p, 0.0);
  const ComplexMatrix x = pauli(Pauli::x), z = pauli(Pauli::z), i2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix local = 0.7 * (std::sin(0.4) * x + std::cos(0.4) * z);
  const ComplexMatrix expected = kron(local, i2) + kron(i2, local) + 0.3 * kron(z, z);
  CHECK(max_abs(m.hamiltonian - expected) < 1e-14);
  CHECK(m.jumps.empty());
}

TEST_CASE("Ising at theta = 0 is diagonal; at pi/2 it is not") {
  IsingParams p;
  const ModelSpec z = build_ising(p, 0.0);
  const ComplexMatrix off = z.hamiltonian - ComplexMatrix(z.hamiltonian.diagonal().asDiagonal());
  CHECK(max_abs(off) == 0.0);
  p.theta = std::numbers::pi / 2;
  const ModelSpec t = build_ising(p, 0.0);
  CHECK(max_abs(t.hamiltonian - ComplexMatrix(t.hamiltonian.diagonal().asDiagonal())) > 0.1);
}

TEST_CASE("Ising bath topologies") {
  IsingParams p;
  p.temperatures = {1.0};
  const ModelSpec uniform = build_ising(p, 0.01);
  CHECK(uniform.jumps.size() == 8);
  const double n = 1.0 / (std::exp(1.0) - 1.0);  // omega = 2B = 1
  CHECK(find_jump(uniform, "sigma-_3")->rate == doctest::Approx(0.01 * (n + 1)));
  CHECK(find_jump(uniform, "sigma+_3")->rate == doctest::Approx(0.01 * n));

  p.n_spins = 5;
  p.split = 2;
  p.field = 1.0;
  p.topology = BathTopology::boundary;
  p.temperatures = {1.0, 5.0};
  const ModelSpec boundary = build_ising(p, 0.05);
  REQUIRE(boundary.jumps.size() == 4);
  CHECK(boundary.space.dim_a == 4);
  CHECK(boundary.space.dim_b == 8);
  CHECK(find_jump(boundary, "sigma+_5")->rate == doctest::Approx(0.05 / (std::exp(2.0 / 5.0) - 1.0)));
  CHECK(find_jump(boundary, "sigma-_1") != nullptr);
  CHECK(find_jump(boundary, "sigma-_3") == nullptr);

  p.temperatures = {1.0};
  CHECK_THROWS_AS(build_ising(p, 0.05), ValidationError);
}

TEST_CASE("weak first bond scales only the 1-2 coupling") {
  IsingParams p;
  p.theta = std::numbers::pi / 2;
  p.first_bond_scale = 1e-3;
  const ModelSpec weak = build_ising(p, 0.0);
  p.first_bond_scale = 1.0;
  const ModelSpec full = build_ising(p, 0.0);
  const ComplexMatrix zz12 = pauli_site(4, 1, Pauli::z).embedded * pauli_site(4, 2, Pauli::z).embedded;
  CHECK(max_abs(full.hamiltonian - weak.hamiltonian - (1.0 - 1e-3) * 0.5 * zz12) < 1e-14);
}

TEST_CASE("Ising subsystem Hamiltonian") {
  IsingParams p;
  p.split = 2;
  p.theta = 0.3;
  const ComplexMatrix h = ising_subsystem_hamiltonian(p);
  IsingParams q = p;
  q.n_spins = 2;
  q.split = 1;
  CHECK(max_abs(h - build_ising(q, 0.0).hamiltonian) < 1e-15);
}

TEST_CASE("Ising validation") {
  IsingParams p;
  p.split = 4;
  CHECK_THROWS_AS(build_ising(p, 0.0), ValidationError);
  p = IsingParams{};
  p.theta = 2.0;
  CHECK_THROWS_AS(build_ising(p, 0.0), ValidationError);
  p = IsingParams{};
  p.n_spins = 13;
  CHECK_THROWS_AS(build_ising(p, 0.0), ValidationError);
  p = IsingParams{};
  CHECK_THROWS_AS(build_ising(p, -0.1), ValidationError);
}

TEST_CASE("ModelSpec validation") {
  ModelSpec m;
  m.space = BipartiteSpace(2, 2);
  m.hamiltonian = ComplexMatrix::Identity(4, 4);
  CHECK_NOTHROW(m.validate());
  m.hamiltonian(0, 1) = 1.0;
  CHECK_THROWS_AS(m.validate(), ValidationError);
  m.hamiltonian = ComplexMatrix::Identity(4, 4);
  m.jumps.push_back({ComplexMatrix::Identity(2, 2), 1.0, "bad"});
  CHECK_THROWS_AS(m.validate(), ValidationError);
}
