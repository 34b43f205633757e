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

#ifndef PURETOMO_PROJECTORS_HPP
#define PURETOMO_PROJECTORS_HPP

#include <cstddef>
#include <vector>

#include "puretomo/state.hpp"

namespace puretomo {

enum class SettingKind { kCanonical, kPhase };

/// One measurement setting: a canonical-basis projector |index><index|, or a
/// two-level phase projector pairing the reference with level `index` at
/// phase step `step` (1, 2 or 3).
struct Setting {
  SettingKind kind;
  std::size_t index;
  int step = 0;
};

/// Superposition (|r> + e^{i pi/2 (step - 1/2)} |k>)/sqrt(2): the three-step
/// interferometric projector family, with the canonical |0> generalized to
/// the reference index r.
PureState phase_projector_state(std::size_t k, int step, std::size_t r,
                                std::size_t dim);

/// Index of the largest canonical probability; ties break to the lowest
/// index. Accepts unnormalized non-negative estimates (argmax is
/// scale-invariant).
std::size_t select_reference(const std::vector<double>& canonical_probs);

/// The adaptive measurement frame: d canonical settings followed by the
/// 3(d-1) phase settings, 4d-3 in total.
class ProjectorFrame {
 public:
  explicit ProjectorFrame(std::size_t dim, std::size_t reference);

  std::size_t dim() const { return dim_; }
  std::size_t reference() const { return reference_; }
  const std::vector<Setting>& settings() const { return settings_; }
  std::size_t size() const { return settings_.size(); }

  /// Projector state for settings()[i].
  PureState projector(std::size_t i) const;

 private:
  std::size_t dim_;
  std::size_t reference_;
  std::vector<Setting> settings_;
};

/// Frame whose reference is chosen adaptively from the canonical outcome.
ProjectorFrame build_frame(const std::vector<double>& canonical_probs);

}  // namespace puretomo

#endif  // PURETOMO_PROJECTORS_HPP
