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

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "puretomo/measurement.hpp"

using namespace puretomo;

namespace {

const NoiseModel kBenchModel{0.18, 0.0, 50000};

}  // namespace

TEST_CASE("born probability: two-level overlaps and trace identities") {
  const PureState psi = PureState::normalized({cplx{1.0}, cplx{1.0}});
  const PureState proj = phase_projector_state(1, 1, 0, 2);
  // cos^2(pi/8)
  CHECK(born_probability(psi, proj) ==
        doctest::Approx(0.8535533905932737).epsilon(1e-13));

  const PureState e0 = PureState::basis(4, 0);
  for (int step = 1; step <= 3; ++step)
    CHECK(born_probability(e0, phase_projector_state(2, step, 0, 4)) ==
          doctest::Approx(0.5).epsilon(1e-14));

  const DensityMatrix mixed = DensityMatrix::maximally_mixed(5);
  CHECK(born_probability(mixed, phase_projector_state(3, 2, 0, 5)) ==
        doctest::Approx(0.2).epsilon(1e-13));
  CHECK(born_probability(mixed, PureState::basis(5, 2)) ==
        doctest::Approx(0.2).epsilon(1e-13));

  CHECK_THROWS_AS(born_probability(e0, PureState::basis(5, 0)),
                  std::invalid_argument);
}

TEST_CASE("detection probability follows 1 - exp(-mu p - dark)") {
  CHECK(detection_probability(0.0, kBenchModel) == 0.0);
  CHECK(detection_probability(1.0, kBenchModel) ==
        doctest::Approx(0.16472978858872797).epsilon(1e-14));
  const NoiseModel dark_only{0.18, 5e-4, 50000};
  CHECK(detection_probability(0.0, dark_only) ==
        doctest::Approx(4.998750208307294e-4).epsilon(1e-13));
  CHECK_THROWS_AS(detection_probability(1.5, kBenchModel), std::domain_error);

  // Monotone in p, mu and dark rate.
  double last = -1.0;
  for (double p = 0.0; p <= 1.0; p += 0.1) {
    const double q = detection_probability(p, kBenchModel);
    CHECK(q > last);
    last = q;
  }
  CHECK(detection_probability(0.4, NoiseModel{0.25, 0.0, 1}) >
        detection_probability(0.4, kBenchModel));
  CHECK(detection_probability(0.4, NoiseModel{0.18, 1e-3, 1}) >
        detection_probability(0.4, kBenchModel));
}

TEST_CASE("expected counts scale with the pulse count") {
  CHECK(expected_counts(1.0, kBenchModel) ==
        doctest::Approx(8236.489429436398).epsilon(1e-13));
  CHECK(expected_counts(0.0, kBenchModel) == 0.0);
  const NoiseModel dark_only{0.18, 5e-4, 50000};
  CHECK(expected_counts(0.0, dark_only) ==
        doctest::Approx(24.99375104153647).epsilon(1e-13));
}

TEST_CASE("small-mu linearization: counts ~ N(mu p + dark)") {
  for (const double dark : {0.0, 2e-4}) {
    for (const double p : {0.0, 1e-4, 2e-3}) {
      const NoiseModel model{0.2, dark, 50000};
      const double exposure = model.mu * p + dark;
      if (exposure <= 0.0 || exposure > 1e-3) continue;
      const double linear = static_cast<double>(model.pulses) * exposure;
      const double exact = expected_counts(p, model);
      CHECK(std::abs(exact - linear) / linear < 1e-3);
    }
  }
}

TEST_CASE("count simulation: degenerate inputs and determinism") {
  RandomStream a(21, 4);
  RandomStream b(21, 4);
  for (int i = 0; i < 50; ++i)
    CHECK(simulate_counts(0.0, kBenchModel, a) == 0);
  CHECK(simulate_counts(0.3, kBenchModel, a) ==
        simulate_counts(0.3, kBenchModel, b));

  RandomStream rng(22, 0);
  const std::uint64_t counts = simulate_counts(1.0, kBenchModel, rng);
  CHECK(counts <= kBenchModel.pulses);
}

TEST_CASE("count simulation matches the expected mean") {
  RandomStream rng(23, 0);
  const int reps = 100000;
  double total = 0.0;
  for (int i = 0; i < reps; ++i)
    total += static_cast<double>(simulate_counts(0.3, kBenchModel, rng));
  const double expected = expected_counts(0.3, kBenchModel);  // 2628.39
  const double q = detection_probability(0.3, kBenchModel);
  const double se =
      std::sqrt(static_cast<double>(kBenchModel.pulses) * q * (1.0 - q) /
                reps);
  CHECK(std::abs(total / reps - expected) < 3.0 * se);
}

TEST_CASE("probability estimation inverts the mean-count relation") {
  for (double p = 0.0; p <= 1.0; p += 0.05) {
    const ProbabilityEstimate est =
        estimate_probability(expected_counts(p, kBenchModel), kBenchModel);
    CHECK(std::abs(est.value - p) < 1e-12);
    CHECK_FALSE(est.saturated);
  }

  // Dark counts exceeding the signal clamp to zero.
  const NoiseModel dark{0.18, 5e-4, 50000};
  const ProbabilityEstimate zero = estimate_probability(0.0, dark);
  CHECK(zero.value == 0.0);
  CHECK_FALSE(zero.saturated);

  // Saturation at counts == N.
  const ProbabilityEstimate sat = estimate_probability(50000.0, kBenchModel);
  CHECK(sat.value == 1.0);
  CHECK(sat.saturated);

  CHECK_THROWS_AS(estimate_probability(10.0, NoiseModel{0.0, 0.0, 100}),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_probability(101.0, NoiseModel{0.18, 0.0, 100}),
                  std::out_of_range);
}

TEST_CASE("pulse statistics at mu = 0.18 match the source model") {
  // e^-mu empty pulses, 1 - e^-mu (1 + mu) multi-photon pulses.
  const double empty = std::exp(-0.18);
  CHECK(empty == doctest::Approx(0.835270211411272).epsilon(1e-14));
  const double multi = 1.0 - std::exp(-0.18) * 1.18;
  CHECK(multi == doctest::Approx(0.014381150534699128).epsilon(1e-12));

  RandomStream rng(24, 0);
  const int pulses = 200000;
  int zeros = 0, multis = 0;
  for (int i = 0; i < pulses; ++i) {
    const std::uint64_t photons = rng.poisson(0.18);
    zeros += photons == 0;
    multis += photons >= 2;
  }
  CHECK(std::abs(static_cast<double>(zeros) / pulses - empty) <
        3.0 * std::sqrt(empty * (1.0 - empty) / pulses));
  CHECK(std::abs(static_cast<double>(multis) / pulses - multi) <
        3.0 * std::sqrt(multi * (1.0 - multi) / pulses));
}

TEST_CASE("probability renormalization") {
  const std::vector<double> probs = normalize_probabilities({0.2, 0.2});
  CHECK(probs[0] == 0.5);
  CHECK(probs[1] == 0.5);
  CHECK_THROWS_AS(normalize_probabilities({0.0, 0.0}), std::runtime_error);
  CHECK_THROWS_AS(normalize_probabilities({-0.1, 0.5}), std::invalid_argument);
}

TEST_CASE("noise model validation") {
  CHECK_THROWS_AS((NoiseModel{-0.1, 0.0, 100}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((NoiseModel{0.18, -1e-4, 100}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((NoiseModel{0.18, 0.0, 0}.validate()),
                  std::invalid_argument);
  CHECK_NOTHROW(kBenchModel.validate());
}
