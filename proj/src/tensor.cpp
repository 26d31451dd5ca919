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

#include "bipotoc/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace bipotoc {

BipartiteSpace::BipartiteSpace(int a, int b) : dim_a(a), dim_b(b) {
  if (a < 1 || b < 1) {
    throw DimensionError("BipartiteSpace: dimensions must be positive, got (" +
                         std::to_string(a) + ", " + std::to_string(b) + ")");
  }
}

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  const Eigen::Index yr = y.rows();
  const Eigen::Index yc = y.cols();
  ComplexMatrix out(x.rows() * yr, x.cols() * yc);
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      out.block(i * yr, j * yc, yr, yc) = x(i, j) * y;
    }
  }
  return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void require_hermitian(const ComplexMatrix& m, const char* what, double tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + " must be square");
  }
  const double scale = m.size() == 0 ? 1.0 : std::max(1.0, m.cwiseAbs().maxCoeff());
  const double defect = hermiticity_defect(m);
  if (defect > tol * scale) {
    throw NotHermitianError(std::string(what) + " is not Hermitian (defect " +
                            std::to_string(defect) + ")");
  }
}

namespace {

// Offsets of every multi-index over `factors` (in ascending factor order)
// into the flat composite index.
std::vector<Eigen::Index> factor_offsets(std::span<const int> dims,
                                         const std::vector<int>& factors) {
  std::vector<Eigen::Index> strides(dims.size(), 1);
  for (int f = static_cast<int>(dims.size()) - 2; f >= 0; --f) {
    strides[f] = strides[f + 1] * dims[f + 1];
  }
  std::vector<Eigen::Index> offsets{0};
  for (int f : factors) {
    std::vector<Eigen::Index> next;
    next.reserve(offsets.size() * dims[f]);
    for (Eigen::Index base : offsets) {
      for (int k = 0; k < dims[f]; ++k) next.push_back(base + k * strides[f]);
    }
    offsets = std::move(next);
  }
  return offsets;
}

struct TraceLayout {
  std::vector<Eigen::Index> kept;
  std::vector<Eigen::Index> traced;
};

TraceLayout trace_layout(Eigen::Index total, std::span<const int> dims,
                         std::span<const int> keep) {
  Eigen::Index product = 1;
  for (int d : dims) {
    if (d < 1) throw DimensionError("partial_trace: factor dimensions must be positive");
    product *= d;
  }
  if (product != total) {
    throw DimensionError("partial_trace: factor dimensions multiply to " +
                         std::to_string(product) + " but operand has dimension " +
                         std::to_string(total));
  }
  std::vector<bool> kept_flag(dims.size(), false);
  for (int k : keep) {
    if (k < 0 || k >= static_cast<int>(dims.size()) || kept_flag[k]) {
      throw DimensionError("partial_trace: invalid or repeated factor index " +
                           std::to_string(k));
    }
    kept_flag[k] = true;
  }
  std::vector<int> kept_factors;
  std::vector<int> traced_factors;
  for (int f = 0; f < static_cast<int>(dims.size()); ++f) {
    (kept_flag[f] ? kept_factors : traced_factors).push_back(f);
  }
  return {factor_offsets(dims, kept_factors), factor_offsets(dims, traced_factors)};
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep) {
  if (m.rows() != m.cols()) throw DimensionError("partial_trace: operand must be square");
  const TraceLayout layout = trace_layout(m.rows(), dims, keep);
  const auto nk = static_cast<Eigen::Index>(layout.kept.size());
  ComplexMatrix out = ComplexMatrix::Zero(nk, nk);
  for (Eigen::Index j = 0; j < nk; ++j) {
    for (Eigen::Index i = 0; i < nk; ++i) {
      Complex acc{0.0, 0.0};
      for (Eigen::Index t : layout.traced) {
        acc += m(layout.kept[i] + t, layout.kept[j] + t);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexVector& psi, std::span<const int> dims,
                            std::span<const int> keep) {
  const TraceLayout layout = trace_layout(psi.size(), dims, keep);
  const auto nk = static_cast<Eigen::Index>(layout.kept.size());
  const auto nt = static_cast<Eigen::Index>(layout.traced.size());
  ComplexMatrix amplitudes(nk, nt);
  for (Eigen::Index t = 0; t < nt; ++t) {
    for (Eigen::Index k = 0; k < nk; ++k) {
      amplitudes(k, t) = psi(layout.kept[k] + layout.traced[t]);
    }
  }
  return amplitudes * amplitudes.adjoint();
}

ComplexVector vectorize(const ComplexMatrix& m) {
  ComplexVector v(m.size());
  const Eigen::Index cols = m.cols();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) v(i * cols + j) = m(i, j);
  }
  return v;
}

ComplexMatrix devectorize(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols) {
  if (rows < 0 || cols < 0 || v.size() != rows * cols) {
    throw DimensionError("devectorize: vector of length " + std::to_string(v.size()) +
                         " cannot be reshaped to " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  }
  return m;
}

HermitianEigen herm_eig(const ComplexMatrix& m) {
  require_hermitian(m, "herm_eig input");
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("herm_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

PsdLog log_psd(const ComplexMatrix& m, double clamp) {
  HermitianEigen eig = herm_eig(m);
  const Eigen::Index n = eig.values.size();
  PsdLog out;
  out.eigenvalues = eig.values;
  out.in_support.assign(static_cast<std::size_t>(n), false);
  RealVector logs = RealVector::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double lambda = eig.values(k);
    if (lambda < -kNegativeEigenvalueTolerance) {
      throw DomainError("log_psd: eigenvalue " + std::to_string(lambda) +
                        " is negative beyond tolerance");
    }
    if (lambda < clamp) {
      out.eigenvalues(k) = std::max(lambda, 0.0);
      continue;
    }
    out.in_support[static_cast<std::size_t>(k)] = true;
    logs(k) = std::log(lambda);
  }
  out.log = eig.vectors * logs.asDiagonal() * eig.vectors.adjoint();
  out.eigenvectors = std::move(eig.vectors);
  return out;
}

ComplexMatrix haar_unitary(int dim, Rng& rng) {
  if (dim < 1) throw DimensionError("haar_unitary: dimension must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix ginibre(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      ginibre(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  // Fix the phases of diag(R) so that the distribution is Haar.
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    const Complex phase = mag > 0.0 ? r(k, k) / mag : Complex(1.0, 0.0);
    q.col(k) *= phase;
  }
  return q;
}

ComplexMatrix haar_unitary(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(dim, rng);
}

int exact_sqrt(Eigen::Index n) {
  if (n < 0) return -1;
  auto r = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? static_cast<int>(r) : -1;
}

ComplexMatrix realign(const ComplexMatrix& target, int d) {
  const Eigen::Index dd = static_cast<Eigen::Index>(d) * d;
  if (target.rows() != dd || target.cols() != dd) {
    throw DimensionError("realign: operand must be " + std::to_string(dd) + "x" +
                         std::to_string(dd));
  }
  ComplexMatrix out(dd, dd);
  for (Eigen::Index j2 = 0; j2 < d; ++j2) {
    for (Eigen::Index i2 = 0; i2 < d; ++i2) {
      for (Eigen::Index j = 0; j < d; ++j) {
        const Eigen::Index tcol = j * d + j2;
        for (Eigen::Index i = 0; i < d; ++i) {
          out(i * d + j, i2 * d + j2) = target(i * d + i2, tcol);
        }
      }
    }
  }
  return out;
}

ComplexMatrix apply_factorwise(const ComplexMatrix& map, const ComplexMatrix& target,
                               FactorCopy copy) {
  if (map.rows() != map.cols()) throw DimensionError("apply_factorwise: map must be square");
  const int d = exact_sqrt(map.rows());
  if (d < 1) {
    throw DimensionError("apply_factorwise: map dimension " + std::to_string(map.rows()) +
                         " is not a perfect square");
  }
  const Eigen::Index dd = map.rows();
  if (target.rows() != dd || target.cols() != dd) {
    throw DimensionError("apply_factorwise: target must be an operator on H (x) H' of size " +
                         std::to_string(dd));
  }
  const ComplexMatrix aligned = realign(target, d);
  ComplexMatrix mapped(dd, dd);
  if (copy == FactorCopy::first) {
    mapped.noalias() = map * aligned;
  } else {
    mapped.noalias() = aligned * map.transpose();
  }
  return realign(mapped, d);
}

}  // namespace bipotoc
