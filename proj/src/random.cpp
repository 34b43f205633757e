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

#include "puretomo/random.hpp"

#include <cmath>

namespace puretomo {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream) noexcept
    : seed_(seed), stream_(stream) {
  counter_ = mix64(mix64(seed + kGolden) ^ mix64(stream + 0x5851f42d4c957f2dULL));
}

std::uint64_t RandomStream::next_u64() noexcept {
  counter_ += kGolden;
  return mix64(counter_);
}

double RandomStream::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

cplx RandomStream::complex_normal() noexcept {
  const double u = uniform();
  const double v = uniform();
  // 1-u lies in (0, 1], so the log is finite.
  const double radius = std::sqrt(-2.0 * std::log(1.0 - u));
  const double angle = 2.0 * M_PI * v;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::uint64_t RandomStream::binomial_small(std::uint64_t trials,
                                           double success) noexcept {
  // BINV: invert the CDF by walking the PMF from k = 0. Callers guarantee
  // (1-success)^trials stays in normal double range.
  const double q = success;
  const double r = q / (1.0 - q);
  double f = std::exp(static_cast<double>(trials) * std::log1p(-q));
  double cum = f;
  const double u = uniform();
  std::uint64_t k = 0;
  while (u > cum && k < trials) {
    ++k;
    f *= r * static_cast<double>(trials - k + 1) / static_cast<double>(k);
    cum += f;
  }
  return k;
}

std::uint64_t RandomStream::binomial(std::uint64_t trials,
                                     double success) noexcept {
  if (trials == 0 || !(success > 0.0)) return 0;
  if (success >= 1.0) return trials;
  if (success > 0.5) return trials - binomial(trials, 1.0 - success);

  const double log_miss = -std::log1p(-success);  // > 0
  // Keep (1-q)^chunk >= e^-600 so the PMF walk starts from a normal double.
  double max_chunk_fp = 600.0 / log_miss;
  std::uint64_t max_chunk =
      max_chunk_fp >= 1e18 ? trials
                           : static_cast<std::uint64_t>(max_chunk_fp);
  if (max_chunk == 0) max_chunk = 1;

  std::uint64_t total = 0;
  std::uint64_t remaining = trials;
  while (remaining > 0) {
    const std::uint64_t chunk = remaining < max_chunk ? remaining : max_chunk;
    total += binomial_small(chunk, success);
    remaining -= chunk;
  }
  return total;
}

std::uint64_t RandomStream::poisson(double mean) noexcept {
  if (!(mean > 0.0)) return 0;
  std::uint64_t total = 0;
  // Poisson(a + b) = Poisson(a) + Poisson(b); chunk so exp(-chunk) is normal.
  while (mean > 500.0) {
    total += poisson(500.0);
    mean -= 500.0;
  }
  double f = std::exp(-mean);
  double cum = f;
  const double u = uniform();
  std::uint64_t k = 0;
  // FP-safe cap: the inversion walk cannot run past any plausible tail.
  const std::uint64_t cap =
      static_cast<std::uint64_t>(mean + 60.0 * std::sqrt(mean) + 200.0);
  while (u > cum && k < cap) {
    ++k;
    f *= mean / static_cast<double>(k);
    cum += f;
  }
  return total + k;
}

}  // namespace puretomo
