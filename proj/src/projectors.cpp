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

#include "puretomo/projectors.hpp"

#include <cmath>
#include <stdexcept>

namespace puretomo {

PureState phase_projector_state(std::size_t k, int step, std::size_t r,
                                std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("dimension must be >= 1");
  if (k >= dim || r >= dim)
    throw std::out_of_range("projector index out of range");
  if (k == r)
    throw std::invalid_argument(
        "phase projector needs a level distinct from the reference");
  if (step < 1 || step > 3)
    throw std::domain_error("phase step must be 1, 2 or 3");

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<cplx> amps(dim);
  amps[r] = inv_sqrt2;
  amps[k] = std::polar(inv_sqrt2, M_PI_2 * (static_cast<double>(step) - 0.5));
  return PureState(std::move(amps));
}

std::size_t select_reference(const std::vector<double>& canonical_probs) {
  if (canonical_probs.empty())
    throw std::invalid_argument("empty probability vector");
  std::size_t best = 0;
  double best_value = 0.0;
  bool any_positive = false;
  for (std::size_t k = 0; k < canonical_probs.size(); ++k) {
    const double p = canonical_probs[k];
    if (p < 0.0)
      throw std::invalid_argument("canonical probabilities must be >= 0");
    if (p > best_value) {
      best_value = p;
      best = k;
      any_positive = true;
    }
  }
  if (!any_positive)
    throw std::runtime_error("all canonical probabilities are zero");
  return best;
}

ProjectorFrame::ProjectorFrame(std::size_t dim, std::size_t reference)
    : dim_(dim), reference_(reference) {
  if (dim == 0) throw std::invalid_argument("dimension must be >= 1");
  if (reference >= dim) throw std::out_of_range("reference index out of range");
  settings_.reserve(4 * dim - 3);
  for (std::size_t k = 0; k < dim; ++k)
    settings_.push_back({SettingKind::kCanonical, k, 0});
  for (std::size_t k = 0; k < dim; ++k) {
    if (k == reference) continue;
    for (int step = 1; step <= 3; ++step)
      settings_.push_back({SettingKind::kPhase, k, step});
  }
}

PureState ProjectorFrame::projector(std::size_t i) const {
  const Setting& s = settings_.at(i);
  if (s.kind == SettingKind::kCanonical)
    return PureState::basis(dim_, s.index);
  return phase_projector_state(s.index, s.step, reference_, dim_);
}

ProjectorFrame build_frame(const std::vector<double>& canonical_probs) {
  const std::size_t reference = select_reference(canonical_probs);
  return ProjectorFrame(canonical_probs.size(), reference);
}

}  // namespace puretomo
