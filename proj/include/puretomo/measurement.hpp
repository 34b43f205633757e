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

#ifndef PURETOMO_MEASUREMENT_HPP
#define PURETOMO_MEASUREMENT_HPP

#include <cstdint>
#include <vector>

#include "puretomo/projectors.hpp"
#include "puretomo/random.hpp"
#include "puretomo/state.hpp"

namespace puretomo {

/// Photon-counting model: a weak pulsed source with mean photon number mu
/// per pulse, detector dark counts lambda_dc per pulse, N pulses per setting.
struct NoiseModel {
  double mu = 0.18;
  double lambda_dc = 0.0;
  std::uint64_t pulses = 50000;

  void validate() const;
};

/// Counts and probability estimate attached to one measurement setting.
struct OutcomeRecord {
  Setting setting;
  std::uint64_t counts = 0;       // 0 in exact mode
  double probability = 0.0;       // exact Born value or clamped estimate
  bool saturated = false;
};

double born_probability(const PureState& state, const PureState& projector);
double born_probability(const DensityMatrix& rho, const PureState& projector);

/// Per-pulse click probability 1 - exp(-mu*p - lambda_dc).
double detection_probability(double p, const NoiseModel& model);

/// Mean counts over N pulses: N * detection_probability.
double expected_counts(double p, const NoiseModel& model);

/// Binomial(N, detection_probability) draw.
std::uint64_t simulate_counts(double p, const NoiseModel& model,
                              RandomStream& rng);

struct ProbabilityEstimate {
  double value = 0.0;
  bool saturated = false;
};

/// Inverts the mean-count relation for p and clamps into [0, 1]. Accepts
/// real-valued counts so the inversion round-trips expected_counts exactly.
/// counts == N saturates the log and returns 1 with the flag set.
ProbabilityEstimate estimate_probability(double counts,
                                         const NoiseModel& model);

/// Rescales non-negative estimates to sum to 1.
std::vector<double> normalize_probabilities(const std::vector<double>& probs);

}  // namespace puretomo

#endif  // PURETOMO_MEASUREMENT_HPP
