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

#ifndef PURETOMO_RANDOM_HPP
#define PURETOMO_RANDOM_HPP

#include <cstdint>

#include "puretomo/linalg.hpp"

namespace puretomo {

/// Counter-based pseudo-random stream. A (seed, stream) pair fully determines
/// the draw sequence, so independent substreams can run on any worker without
/// losing reproducibility. Output i is a fixed-strength mix of the keyed
/// counter (splitmix64 finalizer), identical across platforms.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  std::uint64_t next_u64() noexcept;

  /// Uniform double in [0, 1).
  double uniform() noexcept;

  /// Standard complex Gaussian: real and imaginary parts are independent
  /// N(0, 1). Consumes exactly two uniforms (polar Box-Muller).
  cplx complex_normal() noexcept;

  /// Exact Binomial(trials, success) draw by chunked inversion (BINV). Chunk
  /// sizes are capped so (1-q)^chunk never underflows; any trial count is
  /// handled exactly.
  std::uint64_t binomial(std::uint64_t trials, double success) noexcept;

  /// Exact Poisson(mean) draw by inversion, chunked for large means.
  std::uint64_t poisson(double mean) noexcept;

 private:
  std::uint64_t binomial_small(std::uint64_t trials, double success) noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_;
};

}  // namespace puretomo

#endif  // PURETOMO_RANDOM_HPP
