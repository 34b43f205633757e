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

#ifndef PURETOMO_RECONSTRUCT_HPP
#define PURETOMO_RECONSTRUCT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "puretomo/measurement.hpp"
#include "puretomo/projectors.hpp"
#include "puretomo/state.hpp"

namespace puretomo {

/// Phase probabilities keyed by (level k, phase step).
using PhaseProbabilityMap = std::map<std::pair<std::size_t, int>, double>;

struct PhaseEstimate {
  double angle = 0.0;
  bool low_visibility = false;
};

/// Interferometric phase from the three step probabilities:
/// atan2(-(p3 - p2), p1 - p2). When both differences vanish (below 1e-12)
/// the phase is undetermined; 0 is returned with the flag set.
PhaseEstimate phase_from_probs(double p1, double p2, double p3);

/// Fringe contrast sqrt(((p1-p2)^2 + (p2-p3)^2)/2); equals |rho_{r,k}|, and
/// |c_r||c_k| for pure states.
double visibility(double p1, double p2, double p3);

/// Per-level diagnostics of a reconstruction. Vectors are indexed by level k;
/// the slot at the reference index is identically zero.
struct ReconstructionResult {
  PureState estimate;
  std::size_t reference = 0;
  std::vector<cplx> phase_terms;        // (p1-p2) + i(p3-p2)
  std::vector<double> visibilities;     // |rho_{r,k}| estimates
  std::vector<double> purity_residuals; // Delta_k
  double max_residual = 0.0;
};

struct PurityCertificate {
  std::vector<double> residuals;  // Delta_k, zero at the reference slot
  double max_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// Closed-form inversion: moduli from the canonical probabilities, phases
/// from the three-step differences, the reference phase fixed to 0, final
/// estimate renormalized. canonical_probs[reference] must be positive and
/// phase_probs must cover every (k != reference, step in {1,2,3}).
ReconstructionResult reconstruct_pure(
    const std::vector<double>& canonical_probs,
    const PhaseProbabilityMap& phase_probs, std::size_t reference);

/// Cauchy-Schwarz purity check: Delta_k = |vis_k^2 - p_r p_k| for every
/// k != reference; passes when max_k Delta_k <= threshold.
PurityCertificate certify_purity(const std::vector<double>& canonical_probs,
                                 const PhaseProbabilityMap& phase_probs,
                                 std::size_t reference, double threshold);

struct AdaptiveRun {
  ReconstructionResult reconstruction;
  PurityCertificate certificate;
  std::vector<OutcomeRecord> outcomes;  // exactly 4d-3 records
};

/// Threshold used by the exact-mode pipelines when none is supplied.
inline constexpr double kExactPurityThreshold = 1e-6;

/// Full adaptive protocol on exact Born probabilities: canonical
/// measurement, reference selection, 3(d-1) phase measurements,
/// reconstruction and certification.
AdaptiveRun run_adaptive_tomography(
    const PureState& state,
    std::optional<double> purity_threshold = std::nullopt);
AdaptiveRun run_adaptive_tomography(
    const DensityMatrix& state,
    std::optional<double> purity_threshold = std::nullopt);

/// Same protocol driven through the photon-counting model: counts are
/// simulated per setting, inverted to probability estimates, and the
/// canonical block renormalized before reference selection. The default
/// certificate threshold is three times the propagated standard error of
/// the largest residual.
AdaptiveRun run_adaptive_tomography(
    const PureState& state, const NoiseModel& model, RandomStream& rng,
    std::optional<double> purity_threshold = std::nullopt);
AdaptiveRun run_adaptive_tomography(
    const DensityMatrix& state, const NoiseModel& model, RandomStream& rng,
    std::optional<double> purity_threshold = std::nullopt);

}  // namespace puretomo

#endif  // PURETOMO_RECONSTRUCT_HPP
