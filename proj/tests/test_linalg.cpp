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

#include <doctest.h>

#include "puretomo/linalg.hpp"
#include "puretomo/random.hpp"

using namespace puretomo;

namespace {

CMatrix random_hermitian(std::size_t d, RandomStream& rng) {
  CMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const cplx z = rng.complex_normal();
      if (i == j) {
        m(i, i) = z.real();
      } else {
        m(i, j) = z;
        m(j, i) = std::conj(z);
      }
    }
  }
  return m;
}

}  // namespace

TEST_CASE("jacobi reproduces a hand-solved 2x2 spectrum") {
  // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
  CMatrix m(2);
  m(0, 0) = 2.0;
  m(0, 1) = cplx{0.0, 1.0};
  m(1, 0) = cplx{0.0, -1.0};
  m(1, 1) = 2.0;
  const EigenSystem eig = hermitian_eigensystem(m);
  CHECK(eig.values[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(eig.values[1] == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("jacobi eigenpairs satisfy A v = lambda v with unitary V") {
  RandomStream rng(11, 0);
  for (std::size_t d : {1, 2, 3, 5, 8, 16, 32}) {
    const CMatrix m = random_hermitian(d, rng);
    const EigenSystem eig = hermitian_eigensystem(m);
    REQUIRE(eig.values.size() == d);
    for (std::size_t j = 0; j + 1 < d; ++j)
      CHECK(eig.values[j] <= eig.values[j + 1]);

    // Residual ||A v_j - lambda_j v_j|| per column.
    for (std::size_t j = 0; j < d; ++j) {
      double residual = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        cplx av = 0.0;
        for (std::size_t k = 0; k < d; ++k) av += m(i, k) * eig.vectors(k, j);
        residual += std::norm(av - eig.values[j] * eig.vectors(i, j));
      }
      CHECK(std::sqrt(residual) < 1e-11);
    }

    const CMatrix gram = eig.vectors.adjoint() * eig.vectors;
    CHECK(max_abs_difference(gram, CMatrix::identity(d)) < 1e-12);

    // Trace is basis independent.
    double eig_sum = 0.0;
    for (double v : eig.values) eig_sum += v;
    CHECK(eig_sum == doctest::Approx(trace(m).real()).epsilon(1e-12));
  }
}

TEST_CASE("jacobi handles already-diagonal and degenerate spectra") {
  CMatrix m(3);
  m(0, 0) = 0.5;
  m(1, 1) = 0.5;
  m(2, 2) = -1.0;
  const EigenSystem eig = hermitian_eigensystem(m);
  CHECK(eig.values[0] == doctest::Approx(-1.0));
  CHECK(eig.values[1] == doctest::Approx(0.5));
  CHECK(eig.values[2] == doctest::Approx(0.5));
}

TEST_CASE("matrix helpers") {
  CMatrix a(2);
  a(0, 0) = 1.0;
  a(0, 1) = cplx{0.0, 2.0};
  a(1, 0) = 3.0;
  a(1, 1) = cplx{4.0, -1.0};
  const CMatrix ad = a.adjoint();
  CHECK(ad(1, 0) == cplx{0.0, -2.0});
  CHECK(ad(0, 1) == cplx{3.0, 0.0});
  CHECK(trace(a) == cplx{5.0, -1.0});
  CHECK(hermiticity_defect(a) > 1.0);
  CHECK(hermiticity_defect(a * a.adjoint()) < 1e-15);

  const std::vector<cplx> u{cplx{1.0, 1.0}, cplx{0.0, -1.0}};
  const std::vector<cplx> v{cplx{2.0, 0.0}, cplx{0.0, 1.0}};
  CHECK(inner_product(u, v) == cplx{1.0, -2.0});
  CHECK(vector_norm(u) == doctest::Approx(std::sqrt(3.0)));
}
