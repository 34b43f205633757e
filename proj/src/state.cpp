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

#include "puretomo/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace puretomo {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kEigenFloor = -1e-10;

}  // namespace

PureState::PureState(std::vector<cplx> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty())
    throw std::invalid_argument("pure state needs dimension >= 1");
  double sum = 0.0;
  for (const cplx& c : amplitudes_) sum += std::norm(c);
  if (std::abs(sum - 1.0) > kNormTol)
    throw std::invalid_argument("pure state amplitudes are not unit norm");
}

PureState PureState::normalized(std::vector<cplx> amplitudes) {
  if (amplitudes.empty())
    throw std::invalid_argument("pure state needs dimension >= 1");
  const double norm = vector_norm(amplitudes);
  if (norm <= 0.0)
    throw std::invalid_argument("cannot normalize a zero amplitude vector");
  for (cplx& c : amplitudes) c /= norm;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (dim == 0) throw std::invalid_argument("pure state needs dimension >= 1");
  if (index >= dim) throw std::out_of_range("basis index out of range");
  std::vector<cplx> amps(dim);
  amps[index] = 1.0;
  return PureState(std::move(amps));
}

PureState PureState::uniform(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("pure state needs dimension >= 1");
  std::vector<cplx> amps(dim, cplx{1.0 / std::sqrt(static_cast<double>(dim))});
  return PureState::normalized(std::move(amps));
}

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
  const std::size_t d = entries_.dim();
  if (d == 0) throw std::invalid_argument("density matrix needs dimension >= 1");
  if (hermiticity_defect(entries_) > kNormTol)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(trace(entries_) - cplx{1.0}) > kNormTol)
    throw std::invalid_argument("density matrix trace differs from 1");
  const EigenSystem eig = hermitian_eigensystem(entries_);
  if (eig.values.front() < kEigenFloor)
    throw std::invalid_argument("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
  const std::size_t d = psi.dim();
  CMatrix m(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) = psi.amplitude(i) * std::conj(psi.amplitude(j));
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("density matrix needs dimension >= 1");
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / static_cast<double>(dim);
  return DensityMatrix(std::move(m));
}

PureState haar_random_state(std::size_t dim, RandomStream& rng) {
  if (dim == 0) throw std::invalid_argument("pure state needs dimension >= 1");
  std::vector<cplx> amps(dim);
  for (cplx& c : amps) c = rng.complex_normal();
  return PureState::normalized(std::move(amps));
}

DensityMatrix white_noise_state(const PureState& psi, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::domain_error("white-noise weight must lie in [0, 1]");
  const std::size_t d = psi.dim();
  CMatrix m(d);
  const double mixed = lambda / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      m(i, j) = (1.0 - lambda) * psi.amplitude(i) * std::conj(psi.amplitude(j));
      if (i == j) m(i, j) += mixed;
    }
  }
  return DensityMatrix(std::move(m));
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double sum = 0.0;
  const std::size_t d = rho.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) sum += std::norm(rho.entry(i, j));
  return sum;
}

double white_noise_purity(std::size_t dim, double lambda) {
  const double d = static_cast<double>(dim);
  return (d - 1.0) / d * (lambda - 1.0) * (lambda - 1.0) + 1.0 / d;
}

double fidelity(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("state dimension mismatch");
  return std::abs(inner_product(a.amplitudes(), b.amplitudes()));
}

double fidelity(const PureState& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim())
    throw std::invalid_argument("state dimension mismatch");
  cplx expectation = 0.0;
  const std::size_t d = psi.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      expectation +=
          std::conj(psi.amplitude(i)) * rho.entry(i, j) * psi.amplitude(j);
  const double overlap = std::clamp(expectation.real(), 0.0, 1.0);
  return std::sqrt(overlap);
}

double fidelity(const DensityMatrix& rho, const PureState& psi) {
  return fidelity(psi, rho);
}

double fidelity(const DensityMatrix& sigma, const DensityMatrix& rho) {
  if (sigma.dim() != rho.dim())
    throw std::invalid_argument("state dimension mismatch");
  const std::size_t d = sigma.dim();

  const EigenSystem es = hermitian_eigensystem(sigma.entries());
  CMatrix sqrt_sigma(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      cplx sum = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        const double lam = std::max(es.values[k], 0.0);
        sum += es.vectors(i, k) * std::sqrt(lam) * std::conj(es.vectors(j, k));
      }
      sqrt_sigma(i, j) = sum;
    }
  }

  const CMatrix inner = sqrt_sigma * rho.entries() * sqrt_sigma;
  const EigenSystem ei = hermitian_eigensystem(inner);
  // Eigenvalues at rounding-noise level are exact zeros of the rank-deficient
  // inner matrix; clipping them keeps their square roots from polluting the
  // sum.
  const double floor = 1e-13 * std::max(ei.values.back(), 0.0);
  double f = 0.0;
  for (double lam : ei.values)
    if (lam > floor) f += std::sqrt(lam);
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace puretomo
