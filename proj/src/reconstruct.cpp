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

#include "puretomo/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace puretomo {

namespace {

constexpr double kLowVisibilityTol = 1e-12;

double phase_prob_at(const PhaseProbabilityMap& phase_probs, std::size_t k,
                     int step) {
  const auto it = phase_probs.find({k, step});
  if (it == phase_probs.end())
    throw std::runtime_error("incomplete phase-probability data");
  return it->second;
}

}  // namespace

PhaseEstimate phase_from_probs(double p1, double p2, double p3) {
  const double re = p1 - p2;
  const double im = p3 - p2;
  if (std::abs(re) < kLowVisibilityTol && std::abs(im) < kLowVisibilityTol)
    return {0.0, true};
  // (p1-p2) + i(p3-p2) carries conj(c_k); the imaginary part flips sign to
  // recover arg(c_k).
  return {std::atan2(-im, re), false};
}

double visibility(double p1, double p2, double p3) {
  const double a = p1 - p2;
  const double b = p2 - p3;
  return std::sqrt((a * a + b * b) / 2.0);
}

ReconstructionResult reconstruct_pure(
    const std::vector<double>& canonical_probs,
    const PhaseProbabilityMap& phase_probs, std::size_t reference) {
  const std::size_t d = canonical_probs.size();
  if (d == 0) throw std::invalid_argument("empty probability vector");
  if (reference >= d) throw std::out_of_range("reference index out of range");
  if (!(canonical_probs[reference] > 0.0))
    throw std::runtime_error(
        "degenerate reference: zero canonical probability");

  std::vector<cplx> amps(d);
  std::vector<cplx> phase_terms(d);
  std::vector<double> visibilities(d, 0.0);

  amps[reference] = std::sqrt(canonical_probs[reference]);
  for (std::size_t k = 0; k < d; ++k) {
    if (k == reference) continue;
    if (canonical_probs[k] < 0.0)
      throw std::invalid_argument("canonical probabilities must be >= 0");
    const double p1 = phase_prob_at(phase_probs, k, 1);
    const double p2 = phase_prob_at(phase_probs, k, 2);
    const double p3 = phase_prob_at(phase_probs, k, 3);
    phase_terms[k] = {p1 - p2, p3 - p2};
    visibilities[k] = visibility(p1, p2, p3);
    const PhaseEstimate phase = phase_from_probs(p1, p2, p3);
    amps[k] = std::polar(std::sqrt(canonical_probs[k]), phase.angle);
  }

  ReconstructionResult out{PureState::normalized(std::move(amps)), reference,
                           std::move(phase_terms), std::move(visibilities),
                           {}, 0.0};
  out.purity_residuals.assign(d, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    if (k == reference) continue;
    out.purity_residuals[k] =
        std::abs(out.visibilities[k] * out.visibilities[k] -
                 canonical_probs[reference] * canonical_probs[k]);
    out.max_residual = std::max(out.max_residual, out.purity_residuals[k]);
  }
  return out;
}

PurityCertificate certify_purity(const std::vector<double>& canonical_probs,
                                 const PhaseProbabilityMap& phase_probs,
                                 std::size_t reference, double threshold) {
  const std::size_t d = canonical_probs.size();
  if (d == 0) throw std::invalid_argument("empty probability vector");
  if (reference >= d) throw std::out_of_range("reference index out of range");

  PurityCertificate cert;
  cert.residuals.assign(d, 0.0);
  cert.threshold = threshold;
  for (std::size_t k = 0; k < d; ++k) {
    if (k == reference) continue;
    const double p1 = phase_prob_at(phase_probs, k, 1);
    const double p2 = phase_prob_at(phase_probs, k, 2);
    const double p3 = phase_prob_at(phase_probs, k, 3);
    const double vis = visibility(p1, p2, p3);
    cert.residuals[k] =
        std::abs(vis * vis - canonical_probs[reference] * canonical_probs[k]);
    cert.max_residual = std::max(cert.max_residual, cert.residuals[k]);
  }
  cert.pass = cert.max_residual <= threshold;
  return cert;
}

namespace {

using BornFn = std::function<double(const PureState&)>;

// First-order error propagation of Delta_k through the count inversion.
// Var(p_hat) = q / (mu^2 N (1-q)) with q the per-pulse click probability.
double estimate_variance(double p_hat, const NoiseModel& model) {
  double q = detection_probability(p_hat, model);
  const double n = static_cast<double>(model.pulses);
  q = std::min(q, 1.0 - 1.0 / n);  // keep the saturated case finite
  return q / (model.mu * model.mu * n * (1.0 - q));
}

double propagated_residual_sigma(const std::vector<double>& canonical,
                                 const PhaseProbabilityMap& phase_probs,
                                 std::size_t reference,
                                 const NoiseModel& model) {
  double worst = 0.0;
  for (std::size_t k = 0; k < canonical.size(); ++k) {
    if (k == reference) continue;
    const double p1 = phase_probs.at({k, 1});
    const double p2 = phase_probs.at({k, 2});
    const double p3 = phase_probs.at({k, 3});
    const double d1 = p1 - p2;          // d(vis^2)/dp1
    const double d2 = (p2 - p3) - d1;   // d(vis^2)/dp2
    const double d3 = -(p2 - p3);       // d(vis^2)/dp3
    double var = d1 * d1 * estimate_variance(p1, model) +
                 d2 * d2 * estimate_variance(p2, model) +
                 d3 * d3 * estimate_variance(p3, model);
    var += canonical[k] * canonical[k] *
           estimate_variance(canonical[reference], model);
    var += canonical[reference] * canonical[reference] *
           estimate_variance(canonical[k], model);
    worst = std::max(worst, var);
  }
  return std::sqrt(worst);
}

AdaptiveRun run_exact(std::size_t dim, const BornFn& born,
                      std::optional<double> purity_threshold) {
  std::vector<double> canonical(dim);
  std::vector<OutcomeRecord> outcomes;
  outcomes.reserve(4 * dim - 3);
  for (std::size_t k = 0; k < dim; ++k) {
    canonical[k] = born(PureState::basis(dim, k));
    outcomes.push_back({{SettingKind::kCanonical, k, 0}, 0, canonical[k], false});
  }

  const ProjectorFrame frame = build_frame(canonical);
  PhaseProbabilityMap phase_probs;
  for (std::size_t i = dim; i < frame.size(); ++i) {
    const Setting& s = frame.settings()[i];
    const double p = born(frame.projector(i));
    phase_probs[{s.index, s.step}] = p;
    outcomes.push_back({s, 0, p, false});
  }

  const double threshold = purity_threshold.value_or(kExactPurityThreshold);
  AdaptiveRun run{
      reconstruct_pure(canonical, phase_probs, frame.reference()),
      certify_purity(canonical, phase_probs, frame.reference(), threshold),
      std::move(outcomes)};
  return run;
}

AdaptiveRun run_noisy(std::size_t dim, const BornFn& born,
                      const NoiseModel& model, RandomStream& rng,
                      std::optional<double> purity_threshold) {
  model.validate();
  std::vector<OutcomeRecord> outcomes;
  outcomes.reserve(4 * dim - 3);

  std::vector<double> canonical_raw(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const std::uint64_t counts =
        simulate_counts(born(PureState::basis(dim, k)), model, rng);
    const ProbabilityEstimate est =
        estimate_probability(static_cast<double>(counts), model);
    canonical_raw[k] = est.value;
    outcomes.push_back(
        {{SettingKind::kCanonical, k, 0}, counts, est.value, est.saturated});
  }
  // Moduli must form a unit vector; estimates need not sum to 1.
  const std::vector<double> canonical = normalize_probabilities(canonical_raw);

  const ProjectorFrame frame = build_frame(canonical);
  PhaseProbabilityMap phase_probs;
  for (std::size_t i = dim; i < frame.size(); ++i) {
    const Setting& s = frame.settings()[i];
    const std::uint64_t counts =
        simulate_counts(born(frame.projector(i)), model, rng);
    const ProbabilityEstimate est =
        estimate_probability(static_cast<double>(counts), model);
    phase_probs[{s.index, s.step}] = est.value;
    outcomes.push_back({s, counts, est.value, est.saturated});
  }

  const double threshold = purity_threshold.value_or(
      3.0 *
      propagated_residual_sigma(canonical, phase_probs, frame.reference(),
                                model));
  AdaptiveRun run{
      reconstruct_pure(canonical, phase_probs, frame.reference()),
      certify_purity(canonical, phase_probs, frame.reference(), threshold),
      std::move(outcomes)};
  return run;
}

}  // namespace

AdaptiveRun run_adaptive_tomography(const PureState& state,
                                    std::optional<double> purity_threshold) {
  return run_exact(
      state.dim(),
      [&state](const PureState& proj) { return born_probability(state, proj); },
      purity_threshold);
}

AdaptiveRun run_adaptive_tomography(const DensityMatrix& state,
                                    std::optional<double> purity_threshold) {
  return run_exact(
      state.dim(),
      [&state](const PureState& proj) { return born_probability(state, proj); },
      purity_threshold);
}

AdaptiveRun run_adaptive_tomography(const PureState& state,
                                    const NoiseModel& model, RandomStream& rng,
                                    std::optional<double> purity_threshold) {
  return run_noisy(
      state.dim(),
      [&state](const PureState& proj) { return born_probability(state, proj); },
      model, rng, purity_threshold);
}

AdaptiveRun run_adaptive_tomography(const DensityMatrix& state,
                                    const NoiseModel& model, RandomStream& rng,
                                    std::optional<double> purity_threshold) {
  return run_noisy(
      state.dim(),
      [&state](const PureState& proj) { return born_probability(state, proj); },
      model, rng, purity_threshold);
}

}  // namespace puretomo
