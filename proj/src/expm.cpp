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

#include <array>
#include <cmath>
#include <string>

#include "bipotoc/tensor.hpp"

// Scaling and squaring with diagonal Pade approximants (Higham, SIAM J.
// Matrix Anal. Appl. 26(4), 2005). The degree is the smallest of
// {3, 5, 7, 9, 13} whose backward-error bound covers ||M||_1; beyond the
// degree-13 bound the matrix is scaled by 2^-s first.

namespace bipotoc {
namespace {

constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                           302702400.0,   30270240.0,   2162160.0,
                                           110880.0,      3960.0,       90.0,
                                           1.0};
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

double one_norm(const ComplexMatrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

// Solves (V - U) R = (V + U).
ComplexMatrix pade_quotient(const ComplexMatrix& u, const ComplexMatrix& v) {
  const ComplexMatrix denom = v - u;
  const ComplexMatrix numer = v + u;
  return denom.partialPivLu().solve(numer);
}

template <std::size_t N>
ComplexMatrix pade_low(const ComplexMatrix& a, const std::array<double, N>& b) {
  // Degrees 3..9: U = A * sum_{odd k} b_k A^{k-1}, V = sum_{even k} b_k A^k.
  const Eigen::Index n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  ComplexMatrix odd = b[1] * ident;
  ComplexMatrix even = b[0] * ident;
  ComplexMatrix power = ident;
  for (std::size_t k = 2; k < N; k += 2) {
    power = power * a2;
    even += b[k] * power;
    odd += b[k + 1] * power;
  }
  const ComplexMatrix u = a * odd;
  return pade_quotient(u, even);
}

ComplexMatrix pade13(const ComplexMatrix& a) {
  const auto& b = kPade13;
  const Eigen::Index n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  ComplexMatrix inner_u = b[13] * a6 + b[11] * a4 + b[9] * a2;
  ComplexMatrix u_tail = a6 * inner_u;
  u_tail += b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident;
  const ComplexMatrix u = a * u_tail;
  ComplexMatrix inner_v = b[12] * a6 + b[10] * a4 + b[8] * a2;
  ComplexMatrix v = a6 * inner_v;
  v += b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
  return pade_quotient(u, v);
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& m, const ExpmOptions& options) {
  if (m.rows() != m.cols()) throw DimensionError("expm: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n == 0) return m;
  const double norm = one_norm(m);
  if (!m.allFinite() || !std::isfinite(norm)) throw OverflowError("expm: matrix has non-finite entries");

  if (norm <= kTheta3) return pade_low(m, kPade3);
  if (norm <= kTheta5) return pade_low(m, kPade5);
  if (norm <= kTheta7) return pade_low(m, kPade7);
  if (norm <= kTheta9) return pade_low(m, kPade9);

  int squarings = 0;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  }
  if (squarings > options.max_squarings) {
    throw OverflowError("expm: scaling exponent " + std::to_string(squarings) +
                        " exceeds the bound " + std::to_string(options.max_squarings));
  }
  ComplexMatrix result = pade13(m * std::ldexp(1.0, -squarings));
  ComplexMatrix scratch(n, n);
  for (int k = 0; k < squarings; ++k) {
    scratch.noalias() = result * result;
    result.swap(scratch);
  }
  return result;
}

}  // namespace bipotoc
