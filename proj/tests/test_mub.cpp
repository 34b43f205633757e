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

#include "puretomo/mub.hpp"

using namespace puretomo;

namespace {

std::vector<std::vector<double>> exact_mub_probs(const MubFamily& family,
                                                 const DensityMatrix& rho) {
  std::vector<std::vector<double>> probs(family.dim + 1,
                                         std::vector<double>(family.dim));
  for (std::size_t b = 0; b <= family.dim; ++b)
    for (std::size_t j = 0; j < family.dim; ++j)
      probs[b][j] = born_probability(rho, family.basis_state(b, j));
  return probs;
}

DensityMatrix random_mixed_state(std::size_t d, RandomStream& rng) {
  // Gaussian square root: rho = G G^dagger / tr, full rank almost surely.
  CMatrix g(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  CMatrix rho = g * g.adjoint();
  const double tr = trace(rho).real();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rho(i, j) /= tr;
  for (std::size_t i = 0; i < d; ++i) rho(i, i) = rho(i, i).real();
  return DensityMatrix(std::move(rho));
}

}  // namespace

TEST_CASE("primality helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("mub construction is rejected for non-prime dimensions") {
  CHECK_THROWS_AS(build_mubs(4), UnsupportedDimensionError);
  CHECK_THROWS_AS(build_mubs(6), UnsupportedDimensionError);
  CHECK_THROWS_AS(build_mubs(1), UnsupportedDimensionError);
}

TEST_CASE("mub bases are orthonormal and pairwise unbiased") {
  for (std::size_t d : {2, 3, 5, 7, 11, 13}) {
    const MubFamily family = build_mubs(d);
    REQUIRE(family.bases.size() == d + 1);

    for (std::size_t b = 0; b <= d; ++b) {
      const CMatrix gram = family.bases[b].adjoint() * family.bases[b];
      CHECK(max_abs_difference(gram, CMatrix::identity(d)) < 1e-12);
    }

    const double target = 1.0 / static_cast<double>(d);
    for (std::size_t b = 0; b <= d; ++b) {
      for (std::size_t b2 = b + 1; b2 <= d; ++b2) {
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j < d; ++j) {
            const double overlap = std::norm(inner_product(
                family.basis_state(b, i).amplitudes(),
                family.basis_state(b2, j).amplitudes()));
            CHECK(std::abs(overlap - target) < 1e-10);
          }
        }
      }
    }
  }
}

TEST_CASE("exact-probability inversion reproduces the input state") {
  RandomStream rng(61, 0);
  for (std::size_t d : {2, 3, 5, 7}) {
    const MubFamily family = build_mubs(d);
    for (int rep = 0; rep < 5; ++rep) {
      const PureState psi = haar_random_state(d, rng);
      const double lambda = rng.uniform();
      const DensityMatrix rho = white_noise_state(psi, lambda);
      const CMatrix raw = mub_invert(family, exact_mub_probs(family, rho));
      CHECK(max_abs_difference(raw, rho.entries()) < 1e-9);
    }
    const DensityMatrix mixed = random_mixed_state(d, rng);
    const CMatrix raw = mub_invert(family, exact_mub_probs(family, mixed));
    CHECK(max_abs_difference(raw, mixed.entries()) < 1e-9);
  }
}

TEST_CASE("uniform probabilities invert to the maximally mixed state") {
  const MubFamily family = build_mubs(7);
  const std::vector<std::vector<double>> probs(
      8, std::vector<double>(7, 1.0 / 7.0));
  const CMatrix raw = mub_invert(family, probs);
  CHECK(max_abs_difference(
            raw, DensityMatrix::maximally_mixed(7).entries()) < 1e-12);
}

TEST_CASE("mub_invert validates the table shape") {
  const MubFamily family = build_mubs(3);
  CHECK_THROWS_AS(
      mub_invert(family, std::vector<std::vector<double>>(3)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      mub_invert(family,
                 std::vector<std::vector<double>>(4, std::vector<double>(2))),
      std::invalid_argument);
}

TEST_CASE("psd projection clips and renormalizes") {
  SUBCASE("hand-computed 2x2") {
    CMatrix h(2);
    h(0, 0) = 1.2;
    h(1, 1) = -0.2;
    const DensityMatrix rho = psd_project(h);
    CHECK(rho.entry(0, 0).real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(rho.entry(1, 1)) < 1e-13);
  }
  SUBCASE("hand-computed 3x3") {
    CMatrix h(3);
    h(0, 0) = 0.6;
    h(1, 1) = 0.6;
    h(2, 2) = -0.2;
    const DensityMatrix rho = psd_project(h);
    CHECK(rho.entry(0, 0).real() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(rho.entry(1, 1).real() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(std::abs(rho.entry(2, 2)) < 1e-13);
  }
  SUBCASE("valid density matrices pass through, projection is idempotent") {
    RandomStream rng(62, 0);
    const DensityMatrix rho = random_mixed_state(5, rng);
    const DensityMatrix projected = psd_project(rho.entries());
    CHECK(max_abs_difference(projected.entries(), rho.entries()) < 1e-12);
    const DensityMatrix again = psd_project(projected.entries());
    CHECK(max_abs_difference(again.entries(), projected.entries()) < 1e-12);
  }
  SUBCASE("eigenvalue shifts are bounded by the clipped mass") {
    RandomStream rng(65, 0);
    for (int rep = 0; rep < 20; ++rep) {
      // Density matrix plus a small traceless Hermitian perturbation (the
      // inversion output always has unit trace): the projection may move
      // eigenvalues by at most the clipped negative mass.
      const DensityMatrix base = random_mixed_state(4, rng);
      CMatrix h = base.entries();
      double shift = 0.0;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i; j < 4; ++j) {
          const cplx eps = 0.02 * rng.complex_normal();
          if (i == j) {
            h(i, i) += eps.real();
            shift += eps.real();
          } else {
            h(i, j) += eps;
            h(j, i) += std::conj(eps);
          }
        }
      }
      for (std::size_t i = 0; i < 4; ++i) h(i, i) -= shift / 4.0;
      const EigenSystem input = hermitian_eigensystem(h);
      double clipped_mass = 0.0;
      for (double lam : input.values)
        if (lam < 0.0) clipped_mass -= lam;
      const DensityMatrix projected = psd_project(h);
      const EigenSystem output = hermitian_eigensystem(projected.entries());
      const double top = std::max(input.values.back(), 1.0);
      for (std::size_t k = 0; k < 4; ++k)
        CHECK(std::abs(output.values[k] - std::max(input.values[k], 0.0)) <=
              clipped_mass * top + 1e-12);
    }
  }
  SUBCASE("degenerate inputs") {
    CMatrix zero(2);
    zero(0, 0) = -0.5;
    zero(1, 1) = -0.5;
    CHECK_THROWS_AS(psd_project(zero), std::runtime_error);
    CMatrix skew(2);
    skew(0, 1) = 1.0;
    skew(1, 0) = -1.0;
    CHECK_THROWS_AS(psd_project(skew), std::invalid_argument);
  }
}

TEST_CASE("noisy inversion still yields a physical state") {
  const MubFamily family = build_mubs(7);
  RandomStream rng(63, 0);
  const PureState psi = haar_random_state(7, rng);
  const NoiseModel model{0.18, 5e-4, 50000};
  const MubRun run = run_mub_tomography(psi, family, model, rng);
  CHECK(run.outcomes.size() == 56);
  // DensityMatrix construction already validated PSD/trace/hermiticity.
  CHECK(fidelity(psi, run.estimate) > 0.9);
}

TEST_CASE("exact mub pipeline reaches unit fidelity on pure states") {
  const MubFamily family = build_mubs(5);
  RandomStream rng(64, 0);
  const PureState psi = haar_random_state(5, rng);
  const MubRun run = run_mub_tomography(psi, family);
  CHECK(run.outcomes.size() == 30);
  CHECK(fidelity(psi, run.estimate) >= 1.0 - 1e-9);
}
