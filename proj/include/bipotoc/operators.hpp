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

// Spin, bosonic and site-embedded operators.

#include "bipotoc/tensor.hpp"

namespace bipotoc {

// Collective angular momentum of length j in the basis |j,m>, m = j, j-1, ..., -j.
struct SpinOperators {
  double j = 0.0;
  ComplexMatrix jz;
  ComplexMatrix jp;
  ComplexMatrix jm;
  ComplexMatrix jx;
  ComplexMatrix jy;

  int dim() const noexcept { return static_cast<int>(jz.rows()); }
};

SpinOperators collective_spin(double j);

// Truncated single mode with Fock states |0>..|n_max-1>.
struct BosonOperators {
  int n_max = 0;
  ComplexMatrix a;
  ComplexMatrix a_dag;
  ComplexMatrix num;
};

BosonOperators boson_ops(int n_max);

enum class Pauli { x, y, z, plus, minus };

// sigma_z = diag(1, -1); sigma_(+/-) = (sigma_x +/- i sigma_y) / 2, so
// sigma_minus maps the +1 eigenstate of sigma_z (index 0) to the -1
// eigenstate (index 1).
ComplexMatrix pauli(Pauli which);

struct SiteOperator {
  int n_sites = 0;
  int site = 0;  // 1-based
  ComplexMatrix local;
  ComplexMatrix embedded;
};

// I^{(site-1)} (x) local (x) I^{(n_sites-site)}, for a chain of qubits.
ComplexMatrix embed_site(int n_sites, int site, const ComplexMatrix& local);

SiteOperator pauli_site(int n_sites, int site, Pauli which);

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix anticommutator(const ComplexMatrix& x, const ComplexMatrix& y);

}  // namespace bipotoc
