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

#include "puretomo/mub.hpp"

#include <algorithm>
#include <cmath>

namespace puretomo {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

PureState MubFamily::basis_state(std::size_t b, std::size_t j) const {
  const CMatrix& basis = bases.at(b);
  std::vector<cplx> amps(dim);
  for (std::size_t i = 0; i < dim; ++i) amps[i] = basis(i, j);
  return PureState::normalized(std::move(amps));
}

MubFamily build_mubs(std::size_t dim) {
  if (!is_prime(dim))
    throw UnsupportedDimensionError(
        "mutually unbiased bases require a prime dimension");

  MubFamily family;
  family.dim = dim;
  family.bases.reserve(dim + 1);
  family.bases.push_back(CMatrix::identity(dim));

  if (dim == 2) {
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix x(2);
    x(0, 0) = s;  x(1, 0) = s;
    x(0, 1) = s;  x(1, 1) = -s;
    CMatrix y(2);
    y(0, 0) = s;             y(1, 0) = cplx{0.0, s};
    y(0, 1) = s;             y(1, 1) = cplx{0.0, -s};
    family.bases.push_back(std::move(x));
    family.bases.push_back(std::move(y));
    return family;
  }

  // Odd prime: component m of state |b, j> is w^(b m^2 + j m)/sqrt(d).
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    CMatrix basis(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t m = 0; m < dim; ++m) {
        const std::size_t exponent = (b * m * m + j * m) % dim;
        const double angle =
            2.0 * M_PI * static_cast<double>(exponent) / static_cast<double>(dim);
        basis(m, j) = std::polar(inv_sqrt_d, angle);
      }
    }
    family.bases.push_back(std::move(basis));
  }
  return family;
}

CMatrix mub_invert(const MubFamily& family,
                   const std::vector<std::vector<double>>& probabilities) {
  const std::size_t d = family.dim;
  if (probabilities.size() != d + 1)
    throw std::invalid_argument("probability table needs d+1 rows");
  for (const auto& row : probabilities)
    if (row.size() != d)
      throw std::invalid_argument("probability rows need d entries");

  CMatrix rho(d);
  for (std::size_t b = 0; b <= d; ++b) {
    const std::vector<double> row = normalize_probabilities(probabilities[b]);
    const CMatrix& basis = family.bases[b];
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t l = 0; l < d; ++l)
          rho(i, l) += row[j] * basis(i, j) * std::conj(basis(l, j));
    }
  }
  for (std::size_t i = 0; i < d; ++i) rho(i, i) -= 1.0;
  return rho;
}

DensityMatrix psd_project(const CMatrix& hermitian) {
  if (hermiticity_defect(hermitian) > 1e-10)
    throw std::invalid_argument("input matrix is not Hermitian");
  const std::size_t d = hermitian.dim();
  const EigenSystem eig = hermitian_eigensystem(hermitian);

  std::vector<double> clipped(d);
  double total = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    clipped[k] = std::max(eig.values[k], 0.0);
    total += clipped[k];
  }
  if (total <= 0.0)
    throw std::runtime_error("matrix vanished after eigenvalue clipping");

  CMatrix rho(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double weight = clipped[k] / total;
    if (weight == 0.0) continue;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        rho(i, j) += weight * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  // Rounding guards: the invariants are exact by construction up to FP noise.
  for (std::size_t i = 0; i < d; ++i) rho(i, i) = rho(i, i).real();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const cplx sym = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
      rho(i, j) = sym;
      rho(j, i) = std::conj(sym);
    }
  cplx tr = trace(rho);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rho(i, j) /= tr.real();
  return DensityMatrix(std::move(rho));
}

DensityMatrix mub_reconstruct(
    const MubFamily& family,
    const std::vector<std::vector<double>>& probabilities) {
  return psd_project(mub_invert(family, probabilities));
}

MubRun run_mub_tomography(const PureState& state, const MubFamily& family) {
  const std::size_t d = family.dim;
  if (state.dim() != d) throw std::invalid_argument("state dimension mismatch");
  std::vector<std::vector<double>> probs(d + 1, std::vector<double>(d));
  std::vector<MubOutcome> outcomes;
  outcomes.reserve(d * (d + 1));
  for (std::size_t b = 0; b <= d; ++b) {
    for (std::size_t j = 0; j < d; ++j) {
      const double p = born_probability(state, family.basis_state(b, j));
      probs[b][j] = p;
      outcomes.push_back({b, j, 0, p});
    }
  }
  return {mub_reconstruct(family, probs), std::move(outcomes)};
}

MubRun run_mub_tomography(const PureState& state, const MubFamily& family,
                          const NoiseModel& model, RandomStream& rng) {
  const std::size_t d = family.dim;
  if (state.dim() != d) throw std::invalid_argument("state dimension mismatch");
  model.validate();
  std::vector<std::vector<double>> probs(d + 1, std::vector<double>(d));
  std::vector<MubOutcome> outcomes;
  outcomes.reserve(d * (d + 1));
  for (std::size_t b = 0; b <= d; ++b) {
    for (std::size_t j = 0; j < d; ++j) {
      const double p = born_probability(state, family.basis_state(b, j));
      const std::uint64_t counts = simulate_counts(p, model, rng);
      const ProbabilityEstimate est =
          estimate_probability(static_cast<double>(counts), model);
      probs[b][j] = est.value;
      outcomes.push_back({b, j, counts, est.value});
    }
  }
  return {mub_reconstruct(family, probs), std::move(outcomes)};
}

}  // namespace puretomo
