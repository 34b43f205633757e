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

#ifndef PURETOMO_EXPERIMENTS_HPP
#define PURETOMO_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "puretomo/measurement.hpp"
#include "puretomo/reconstruct.hpp"
#include "puretomo/state.hpp"

namespace puretomo {

/// Shared study parameters. Per-trial substreams are RandomStream(seed,
/// trial), so results are independent of worker scheduling; rows are always
/// written in trial order and outputs are byte-reproducible.
struct ExperimentConfig {
  std::vector<std::size_t> dims;
  std::size_t trials = 2000;
  double mu = 0.18;
  std::uint64_t pulses = 50000;
  std::vector<double> dark_rates = {0.0, 2e-4, 5e-4};
  std::vector<double> lambda_grid = default_lambda_grid();
  std::uint64_t seed = 1;
  bool exact_mode = false;
  std::size_t threads = 0;  // 0 = hardware concurrency

  static std::vector<double> default_lambda_grid();

  NoiseModel noise_model(double dark_rate) const {
    return NoiseModel{mu, dark_rate, pulses};
  }
};

struct FidVsDimCell {
  std::size_t dim = 0;
  double dark_rate = 0.0;
  std::size_t trials = 0;
  double mean_fidelity = 0.0;
  double stddev_fidelity = 0.0;
};

/// Noisy adaptive tomography of Haar states over a (dim, dark-rate) grid.
/// CSV columns: dim,dark_rate,trial,seed,fidelity.
std::vector<FidVsDimCell> run_fidelity_vs_dimension(
    const ExperimentConfig& config, std::ostream& csv);

struct VisVsPurityCell {
  double lambda = 0.0;
  double purity = 0.0;
  std::size_t trials = 0;
  double mean_max_residual = 0.0;
  double stddev_max_residual = 0.0;
};

/// Purity-certificate residuals of white-noise states across a lambda grid.
/// CSV columns: lambda,purity,trial,seed,max_residual.
std::vector<VisVsPurityCell> run_visibility_vs_purity(
    const ExperimentConfig& config, std::ostream& csv);

struct CompareSummary {
  std::size_t dim = 0;
  std::size_t trials = 0;
  double mean_fidelity_adaptive = 0.0;
  double stddev_fidelity_adaptive = 0.0;
  double mean_fidelity_mub = 0.0;
  double stddev_fidelity_mub = 0.0;
  std::size_t outcomes_adaptive = 0;
  std::size_t outcomes_mub = 0;
};

/// Adaptive vs MUB tomography of the same states under the same noise.
/// CSV columns:
/// dim,trial,seed,fidelity_adaptive,fidelity_mub,outcomes_adaptive,outcomes_mub.
CompareSummary run_method_comparison(const ExperimentConfig& config,
                                     std::ostream& csv);

/// Amplitude list ("0.5,0.5i,-0.5,0.5"), or a preset: uniform, basis-K,
/// random (drawn from rng).
PureState parse_state_spec(const std::string& spec, std::size_t dim,
                           RandomStream& rng);

struct SingleShotResult {
  AdaptiveRun run;
  double fidelity = 0.0;
};

/// One tomography run of an explicit state, reported human-readably; the
/// outcome table optionally lands in CSV form.
SingleShotResult run_single_shot(const ExperimentConfig& config,
                                 const std::string& state_spec,
                                 std::ostream& report,
                                 std::ostream* csv = nullptr);

/// Shortest round-trip decimal form, locale-independent.
std::string format_double(double value);

}  // namespace puretomo

#endif  // PURETOMO_EXPERIMENTS_HPP
