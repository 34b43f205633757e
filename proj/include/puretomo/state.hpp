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

#ifndef PURETOMO_STATE_HPP
#define PURETOMO_STATE_HPP

#include <cstddef>
#include <vector>

#include "puretomo/linalg.hpp"
#include "puretomo/random.hpp"

namespace puretomo {

/// Unit-norm complex amplitude vector. Construction enforces the norm
/// invariant (within 1e-12); use normalized() to rescale raw amplitudes.
class PureState {
 public:
  explicit PureState(std::vector<cplx> amplitudes);

  static PureState normalized(std::vector<cplx> amplitudes);
  static PureState basis(std::size_t dim, std::size_t index);
  static PureState uniform(std::size_t dim);

  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }
  cplx amplitude(std::size_t k) const { return amplitudes_[k]; }

 private:
  std::vector<cplx> amplitudes_;
};

/// Hermitian, PSD, trace-1 operator. All three invariants are checked at
/// construction (hermiticity and trace within 1e-12, eigenvalues >= -1e-10).
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix entries);

  static DensityMatrix pure(const PureState& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return entries_.dim(); }
  const CMatrix& entries() const { return entries_; }
  cplx entry(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  CMatrix entries_;
};

/// Haar-random pure state: d i.i.d. standard complex Gaussians, normalized.
PureState haar_random_state(std::size_t dim, RandomStream& rng);

/// White-noise mixture (1-lambda)|psi><psi| + lambda*I/d.
DensityMatrix white_noise_state(const PureState& psi, double lambda);

/// Tr(rho^2), in [1/d, 1].
double purity(const DensityMatrix& rho);

/// Closed-form purity of white_noise_state(psi, lambda) at dimension d.
double white_noise_purity(std::size_t dim, double lambda);

double fidelity(const PureState& a, const PureState& b);
double fidelity(const PureState& psi, const DensityMatrix& rho);
double fidelity(const DensityMatrix& rho, const PureState& psi);

/// Uhlmann fidelity Tr sqrt(sqrt(sigma) rho sqrt(sigma)), evaluated through
/// two Hermitian eigendecompositions.
double fidelity(const DensityMatrix& sigma, const DensityMatrix& rho);

}  // namespace puretomo

#endif  // PURETOMO_STATE_HPP
