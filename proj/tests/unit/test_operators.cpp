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

#include "bipotoc/operators.hpp"

using namespace bipotoc;

namespace {
double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }
const Complex kI{0.0, 1.0};
}  // namespace

TEST_CASE("spin-1 matrices") {
  const SpinOperators s = collective_spin(1.0);
  REQUIRE(s.dim() == 3);
  CHECK(s.jz(0, 0).real() == 1.0);
  CHECK(s.jz(2, 2).real() == -1.0);
  CHECK(std::abs(s.jp(0, 1) - std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(s.jp(1, 2) - std::sqrt(2.0)) < 1e-15);
  CHECK(max_abs(s.jm - s.jp.adjoint()) == 0.0);
}

TEST_CASE("angular momentum algebra holds for several spin lengths") {
  for (double j : {0.5, 1.0, 1.5, 2.0, 3.5}) {
    CAPTURE(j);
    const SpinOperators s = collective_spin(j);
    const int d = s.dim();
    CHECK(d == static_cast<int>(2 * j + 1));
    CHECK(max_abs(commutator(s.jx, s.jy) - kI * s.jz) < 1e-12);
    CHECK(max_abs(commutator(s.jz, s.jp) - s.jp) < 1e-12);
    const ComplexMatrix casimir = s.jx * s.jx + s.jy * s.jy + s.jz * s.jz;
    CHECK(max_abs(casimir - j * (j + 1) * ComplexMatrix::Identity(d, d)) < 1e-12);
  }
}

TEST_CASE("collective_spin rejects invalid lengths") {
  CHECK_THROWS_AS(collective_spin(0.3), DomainError);
  CHECK_THROWS_AS(collective_spin(-1.0), DomainError);
}

TEST_CASE("truncated boson operators") {
  const BosonOperators b = boson_ops(4);
  CHECK(std::abs(b.a(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(b.a(2, 3) - std::sqrt(3.0)) < 1e-15);
  CHECK(max_abs(b.num - b.a_dag * b.a) < 1e-14);
  for (int n = 0; n < 4; ++n) CHECK(b.num(n, n).real() == doctest::Approx(n));
  // [a, a^dag] = I except in the truncated corner, where it is 1 - n_max.
  const ComplexMatrix c = commutator(b.a, b.a_dag);
  for (int n = 0; n < 3; ++n) CHECK(std::abs(c(n, n) - 1.0) < 1e-14);
  CHECK(std::abs(c(3, 3) + 3.0) < 1e-14);
  CHECK_THROWS_AS(boson_ops(1), DomainError);
}

TEST_CASE("Pauli matrices and ladder operators") {
  const ComplexMatrix x = pauli(Pauli::x), y = pauli(Pauli::y), z = pauli(Pauli::z);
  CHECK(max_abs(x * y - kI * z) < 1e-15);
  CHECK(z(0, 0).real() == 1.0);
  CHECK(z(1, 1).real() == -1.0);
  const ComplexMatrix m = pauli(Pauli::minus);
  CHECK(std::abs(m(1, 0) - 1.0) == 0.0);
  CHECK(max_abs(m - 0.5 * (x - kI * y)) < 1e-15);
  CHECK(max_abs(pauli(Pauli::plus) - m.adjoint()) == 0.0);
}

TEST_CASE("site embedding") {
  const ComplexMatrix z2 = embed_site(3, 2, pauli(Pauli::z));
  REQUIRE(z2.rows() == 8);
  // Site 2 of |b1 b2 b3> is bit 1 of index 4 b1 + 2 b2 + b3.
  for (int k = 0; k < 8; ++k) CHECK(z2(k, k).real() == ((k >> 1) & 1 ? -1.0 : 1.0));
  const SiteOperator s = pauli_site(3, 1, Pauli::x);
  CHECK(s.site == 1);
  CHECK(max_abs(s.embedded * s.embedded - ComplexMatrix::Identity(8, 8)) < 1e-15);
  CHECK(max_abs(commutator(embed_site(3, 1, pauli(Pauli::x)), embed_site(3, 3, pauli(Pauli::y)))) == 0.0);
  CHECK(max_abs(anticommutator(pauli(Pauli::x), pauli(Pauli::y))) < 1e-15);
  CHECK_THROWS_AS(embed_site(3, 0, pauli(Pauli::z)), DimensionError);
  CHECK_THROWS_AS(embed_site(3, 4, pauli(Pauli::z)), DimensionError);
  CHECK_THROWS_AS(embed_site(3, 1, ComplexMatrix::Identity(3, 3)), DimensionError);
}
