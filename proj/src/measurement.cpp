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

#include "puretomo/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace puretomo {

void NoiseModel::validate() const {
  if (!(mu >= 0.0)) throw std::invalid_argument("mu must be >= 0");
  if (!(lambda_dc >= 0.0))
    throw std::invalid_argument("lambda_dc must be >= 0");
  if (pulses < 1) throw std::invalid_argument("pulse count must be >= 1");
}

double born_probability(const PureState& state, const PureState& projector) {
  if (state.dim() != projector.dim())
    throw std::invalid_argument("state dimension mismatch");
  const double p =
      std::norm(inner_product(projector.amplitudes(), state.amplitudes()));
  return std::clamp(p, 0.0, 1.0);
}

double born_probability(const DensityMatrix& rho, const PureState& projector) {
  if (rho.dim() != projector.dim())
    throw std::invalid_argument("state dimension mismatch");
  cplx expectation = 0.0;
  const std::size_t d = rho.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      expectation += std::conj(projector.amplitude(i)) * rho.entry(i, j) *
                     projector.amplitude(j);
  return std::clamp(expectation.real(), 0.0, 1.0);
}

double detection_probability(double p, const NoiseModel& model) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("projection probability must lie in [0, 1]");
  return -std::expm1(-(model.mu * p + model.lambda_dc));
}

double expected_counts(double p, const NoiseModel& model) {
  return static_cast<double>(model.pulses) * detection_probability(p, model);
}

std::uint64_t simulate_counts(double p, const NoiseModel& model,
                              RandomStream& rng) {
  return rng.binomial(model.pulses, detection_probability(p, model));
}

ProbabilityEstimate estimate_probability(double counts,
                                         const NoiseModel& model) {
  model.validate();
  if (model.mu <= 0.0)
    throw std::invalid_argument("probability inversion needs mu > 0");
  const double n = static_cast<double>(model.pulses);
  if (counts < 0.0 || counts > n)
    throw std::out_of_range("counts outside [0, pulses]");
  if (counts == n) return {1.0, true};
  const double raw =
      (-std::log1p(-counts / n) - model.lambda_dc) / model.mu;
  return {std::clamp(raw, 0.0, 1.0), false};
}

std::vector<double> normalize_probabilities(const std::vector<double>& probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw std::invalid_argument("probabilities must be >= 0");
    sum += p;
  }
  if (sum <= 0.0)
    throw std::runtime_error("cannot normalize all-zero probabilities");
  std::vector<double> out(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) out[i] = probs[i] / sum;
  return out;
}

}  // namespace puretomo
