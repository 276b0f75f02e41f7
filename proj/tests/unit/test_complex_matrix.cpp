// Copyright 2026 The qcontrol Authors
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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qcontrol/complex_matrix.hpp"
#include "qcontrol/eigen.hpp"
#include "qcontrol/errors.hpp"
#include "qcontrol/random_states.hpp"

using namespace qcontrol;
using Catch::Matchers::WithinAbs;

namespace {

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(d);
  for (std::size_t r = 0; r < d; ++r) {
    m(r, r) = g(rng);
    for (std::size_t c = r + 1; c < d; ++c) {
      m(r, c) = Complex(g(rng), g(rng));
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("only power-of-two dimensions from 2 to 16 are accepted") {
  CHECK_THROWS_AS(ComplexMatrix(1), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(17), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(3), DimensionError);
  CHECK_NOTHROW(ComplexMatrix(16));
  CHECK_THROWS_AS(ComplexMatrix(2) + ComplexMatrix(4), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, {1.0, 2.0, 3.0}), DimensionError);
}

TEST_CASE("basic algebra") {
  const ComplexMatrix a(2, {1.0, Complex(0, 2), 3.0, 4.0});
  const ComplexMatrix b(2, {0.0, 1.0, 1.0, 0.0});
  const ComplexMatrix ab = a * b;
  CHECK(ab == ComplexMatrix(2, {Complex(0, 2), 1.0, 4.0, 3.0}));
  CHECK(a.adjoint()(0, 1) == Complex(3.0, 0.0));
  CHECK(a.adjoint()(1, 0) == Complex(0.0, -2.0));
  CHECK(a.transpose()(0, 1) == Complex(3.0, 0.0));
  CHECK(a.conjugate()(0, 1) == Complex(0.0, -2.0));
  CHECK(a.trace() == Complex(5.0, 0.0));
  CHECK(max_abs_diff(a - a, ComplexMatrix(2)) == 0.0);
  CHECK(hermiticity_error(b) == 0.0);
  CHECK_THAT(hermiticity_error(a), WithinAbs(std::abs(Complex(3, 2)), 1e-15));
  CHECK_THAT(frobenius_norm(ComplexMatrix::identity(4)), WithinAbs(2.0, 1e-15));
}

TEST_CASE("projector and apply") {
  const std::vector<Complex> ket{Complex(0.6, 0), Complex(0, 0.8)};
  const ComplexMatrix p = projector(ket);
  CHECK_THAT(std::abs(p.trace() - 1.0), WithinAbs(0.0, 1e-15));
  CHECK(max_abs_diff(p * p, p) < 1e-15);
  const auto out = qcontrol::apply(p, ket);
  CHECK(std::abs(out[0] - ket[0]) < 1e-15);
  CHECK(std::abs(out[1] - ket[1]) < 1e-15);
}

TEST_CASE("Jacobi eigenvalues agree with Eigen on random Hermitian matrices") {
  Rng rng(7);
  for (std::size_t d : {2u, 4u, 8u, 16u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix m = random_hermitian(d, rng);
      const std::vector<double> ours = hermitian_eigenvalues(m);
      const std::vector<double> ref =
          oracle::eigenvalues_desc(oracle::to_eigen(m));
      REQUIRE(ours.size() == ref.size());
      for (std::size_t k = 0; k < d; ++k) {
        CHECK_THAT(ours[k], WithinAbs(ref[k], 1e-11));
      }
    }
  }
}

TEST_CASE("eigenvectors diagonalise the input") {
  Rng rng(11);
  for (std::size_t d : {2u, 4u, 8u, 16u}) {
    const ComplexMatrix m = random_hermitian(d, rng);
    const EigenSystem es = hermitian_eigensystem(m);
    const ComplexMatrix& v = es.vectors;
    CHECK(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(d)) < 1e-12);
    std::vector<Complex> diag(es.values.begin(), es.values.end());
    CHECK(max_abs_diff(v * ComplexMatrix::diagonal(diag) * v.adjoint(), m) < 1e-11);
    CHECK(std::is_sorted(es.values.rbegin(), es.values.rend()));
  }
}

TEST_CASE("degenerate and already diagonal spectra") {
  const ComplexMatrix id = ComplexMatrix::identity(8);
  for (double v : hermitian_eigenvalues(id)) CHECK(v == 1.0);
  const std::vector<Complex> d{3.0, -1.0, 2.0, 0.0};
  CHECK(hermitian_eigenvalues(ComplexMatrix::diagonal(d)) ==
        std::vector<double>{3.0, 2.0, 0.0, -1.0});
  CHECK(min_eigenvalue(ComplexMatrix::diagonal(d)) == -1.0);
}

TEST_CASE("non-Hermitian input is refused") {
  const ComplexMatrix m(2, {0.0, 1.0, 0.0, 0.0});
  CHECK_THROWS_AS(hermitian_eigensystem(m), DomainError);
}
