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

#include "bipotoc/operators.hpp"

#include <cmath>
#include <string>

namespace bipotoc {

SpinOperators collective_spin(double j) {
  const double twice = 2.0 * j;
  if (!(j >= 0.0) || std::abs(twice - std::round(twice)) > 1e-12) {
    throw DomainError("collective_spin: 2j must be a non-negative integer, got j = " +
                      std::to_string(j));
  }
  const int dim = static_cast<int>(std::lround(twice)) + 1;
  SpinOperators s;
  s.j = j;
  s.jz = ComplexMatrix::Zero(dim, dim);
  s.jp = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const double m = j - k;
    s.jz(k, k) = m;
    if (k > 0) {
      // J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>, and m+1 sits at index k-1.
      s.jp(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
  }
  s.jm = s.jp.adjoint();
  s.jx = 0.5 * (s.jp + s.jm);
  s.jy = Complex(0.0, -0.5) * (s.jp - s.jm);
  return s;
}

BosonOperators boson_ops(int n_max) {
  if (n_max < 2) {
    throw DomainError("boson_ops: Fock cutoff must be at least 2, got " +
                      std::to_string(n_max));
  }
  BosonOperators b;
  b.n_max = n_max;
  b.a = ComplexMatrix::Zero(n_max, n_max);
  for (int n = 1; n < n_max; ++n) b.a(n - 1, n) = std::sqrt(static_cast<double>(n));
  b.a_dag = b.a.adjoint();
  b.num = b.a_dag * b.a;
  return b;
}

ComplexMatrix pauli(Pauli which) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  const Complex i(0.0, 1.0);
  switch (which) {
    case Pauli::x:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Pauli::y:
      m(0, 1) = -i;
      m(1, 0) = i;
      break;
    case Pauli::z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    case Pauli::plus:
      m(0, 1) = 1.0;
      break;
    case Pauli::minus:
      m(1, 0) = 1.0;
      break;
  }
  return m;
}

ComplexMatrix embed_site(int n_sites, int site, const ComplexMatrix& local) {
  if (n_sites < 1 || site < 1 || site > n_sites) {
    throw DimensionError("embed_site: site " + std::to_string(site) +
                         " out of range for a chain of " + std::to_string(n_sites));
  }
  if (local.rows() != 2 || local.cols() != 2) {
    throw DimensionError("embed_site: local operator must be 2x2");
  }
  const Eigen::Index left = Eigen::Index{1} << (site - 1);
  const Eigen::Index right = Eigen::Index{1} << (n_sites - site);
  return kron(kron(ComplexMatrix::Identity(left, left), local),
              ComplexMatrix::Identity(right, right));
}

SiteOperator pauli_site(int n_sites, int site, Pauli which) {
  SiteOperator op;
  op.n_sites = n_sites;
  op.site = site;
  op.local = pauli(which);
  op.embedded = embed_site(n_sites, site, op.local);
  return op;
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  return x * y - y * x;
}

ComplexMatrix anticommutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  return x * y + y * x;
}

}  // namespace bipotoc
