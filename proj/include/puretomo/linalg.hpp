// Copyright 2026 The puretomo Authors
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

#ifndef PURETOMO_LINALG_HPP
#define PURETOMO_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace puretomo {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static CMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return a_[i * dim_ + j];
  }

  const std::vector<cplx>& data() const { return a_; }

  CMatrix adjoint() const;

  friend CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);
  friend CMatrix operator+(const CMatrix& lhs, const CMatrix& rhs);
  friend CMatrix operator-(const CMatrix& lhs, const CMatrix& rhs);
  friend CMatrix operator*(cplx scale, const CMatrix& m);

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> a_;
};

cplx trace(const CMatrix& m);

/// Frobenius norm of the off-diagonal part.
double off_diagonal_norm(const CMatrix& m);

/// Largest entrywise deviation from m == m^dagger.
double hermiticity_defect(const CMatrix& m);

/// Largest entrywise |lhs - rhs|.
double max_abs_difference(const CMatrix& lhs, const CMatrix& rhs);

struct EigenSystem {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column j is the eigenvector of values[j]
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Sweeps until the off-diagonal norm drops below 1e-13 (at most 100 sweeps).
EigenSystem hermitian_eigensystem(const CMatrix& m);

/// <lhs|rhs> with the physicists' convention (conjugate-linear in lhs).
cplx inner_product(const std::vector<cplx>& lhs, const std::vector<cplx>& rhs);

double vector_norm(const std::vector<cplx>& v);

}  // namespace puretomo

#endif  // PURETOMO_LINALG_HPP
