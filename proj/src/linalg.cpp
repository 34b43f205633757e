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

#include "puretomo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace puretomo {

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.dim() != rhs.dim())
    throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t d = lhs.dim();
  CMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const cplx lik = lhs(i, k);
      if (lik == cplx{}) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += lik * rhs(k, j);
    }
  }
  return out;
}

CMatrix operator+(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.dim() != rhs.dim())
    throw std::invalid_argument("matrix dimension mismatch");
  CMatrix out(lhs.dim());
  for (std::size_t i = 0; i < out.a_.size(); ++i)
    out.a_[i] = lhs.a_[i] + rhs.a_[i];
  return out;
}

CMatrix operator-(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.dim() != rhs.dim())
    throw std::invalid_argument("matrix dimension mismatch");
  CMatrix out(lhs.dim());
  for (std::size_t i = 0; i < out.a_.size(); ++i)
    out.a_[i] = lhs.a_[i] - rhs.a_[i];
  return out;
}

CMatrix operator*(cplx scale, const CMatrix& m) {
  CMatrix out(m.dim());
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = scale * m.a_[i];
  return out;
}

cplx trace(const CMatrix& m) {
  cplx t = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

double off_diagonal_norm(const CMatrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (i != j) sum += std::norm(m(i, j));
  return std::sqrt(sum);
}

double hermiticity_defect(const CMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

double max_abs_difference(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.dim() != rhs.dim())
    throw std::invalid_argument("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < lhs.dim(); ++i)
    for (std::size_t j = 0; j < lhs.dim(); ++j)
      worst = std::max(worst, std::abs(lhs(i, j) - rhs(i, j)));
  return worst;
}

namespace {

// One complex Jacobi rotation on the (p,q) plane, chosen to zero a(p,q).
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const cplx beta = a(p, q);
  const double absb = std::abs(beta);
  if (absb == 0.0) return;
  const cplx w = beta / absb;  // phase of the pivot
  const double alpha = a(p, p).real();
  const double gamma = a(q, q).real();
  const double tau = (gamma - alpha) / (2.0 * absb);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx sw = s * w;
  const cplx swc = s * std::conj(w);

  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {  // A <- A J
    const cplx aip = a(i, p);
    const cplx aiq = a(i, q);
    a(i, p) = c * aip - swc * aiq;
    a(i, q) = sw * aip + c * aiq;
  }
  for (std::size_t j = 0; j < d; ++j) {  // A <- J^dagger A
    const cplx apj = a(p, j);
    const cplx aqj = a(q, j);
    a(p, j) = c * apj - sw * aqj;
    a(q, j) = swc * apj + c * aqj;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (std::size_t i = 0; i < d; ++i) {  // V <- V J
    const cplx vip = v(i, p);
    const cplx viq = v(i, q);
    v(i, p) = c * vip - swc * viq;
    v(i, q) = sw * vip + c * viq;
  }
}

}  // namespace

EigenSystem hermitian_eigensystem(const CMatrix& m) {
  const std::size_t d = m.dim();
  if (d == 0) throw std::invalid_argument("empty matrix");
  CMatrix a = m;
  CMatrix v = CMatrix::identity(d);

  double scale = 0.0;
  for (const cplx& z : m.data()) scale += std::norm(z);
  scale = std::sqrt(scale);
  // Converging well past the 1e-13 contract keeps eigenvalues of
  // rank-deficient inputs clean enough for downstream square roots.
  const double off_tol = 1e-15 * std::max(1.0, scale);
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < off_tol) break;
    for (std::size_t p = 0; p + 1 < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenSystem out;
  out.values.resize(d);
  out.vectors = CMatrix(d);
  for (std::size_t j = 0; j < d; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < d; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

cplx inner_product(const std::vector<cplx>& lhs, const std::vector<cplx>& rhs) {
  if (lhs.size() != rhs.size())
    throw std::invalid_argument("vector dimension mismatch");
  cplx sum = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    sum += std::conj(lhs[i]) * rhs[i];
  return sum;
}

double vector_norm(const std::vector<cplx>& v) {
  double sum = 0.0;
  for (const cplx& z : v) sum += std::norm(z);
  return std::sqrt(sum);
}

}  // namespace puretomo
