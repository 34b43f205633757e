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

#ifndef PURETOMO_MUB_HPP
#define PURETOMO_MUB_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "puretomo/measurement.hpp"
#include "puretomo/random.hpp"
#include "puretomo/state.hpp"

namespace puretomo {

struct UnsupportedDimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::size_t n);

/// d+1 mutually unbiased orthonormal bases for prime d. bases[0] is the
/// canonical basis; every cross-basis overlap squared equals 1/d.
struct MubFamily {
  std::size_t dim = 0;
  std::vector<CMatrix> bases;  // column j of bases[b] is the state |b, j>

  PureState basis_state(std::size_t b, std::size_t j) const;
};

/// Quadratic-exponential construction for odd primes; the three Pauli
/// eigenbases for d = 2. Non-prime dimensions are unsupported.
MubFamily build_mubs(std::size_t dim);

/// Linear inversion rho = sum_b sum_j p_{b,j} |b,j><b,j| - I. Rows are
/// renormalized to sum to 1 first. The result is Hermitian and trace-1 but
/// can be non-physical under noise; see psd_project.
CMatrix mub_invert(const MubFamily& family,
                   const std::vector<std::vector<double>>& probabilities);

/// Physical projection: clip negative eigenvalues to zero and renormalize
/// the trace to 1.
DensityMatrix psd_project(const CMatrix& hermitian);

/// mub_invert followed by psd_project.
DensityMatrix mub_reconstruct(
    const MubFamily& family,
    const std::vector<std::vector<double>>& probabilities);

struct MubOutcome {
  std::size_t basis = 0;
  std::size_t column = 0;
  std::uint64_t counts = 0;
  double probability = 0.0;
};

struct MubRun {
  DensityMatrix estimate;
  std::vector<MubOutcome> outcomes;  // exactly d(d+1) records
};

/// Standard-tomography pipeline on exact Born probabilities.
MubRun run_mub_tomography(const PureState& state, const MubFamily& family);

/// Same pipeline through the photon-counting model.
MubRun run_mub_tomography(const PureState& state, const MubFamily& family,
                          const NoiseModel& model, RandomStream& rng);

}  // namespace puretomo

#endif  // PURETOMO_MUB_HPP
