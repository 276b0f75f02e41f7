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

#include "qcontrol/random_states.hpp"

#include <cmath>

#include "qcontrol/errors.hpp"

namespace qcontrol {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

ComplexMatrix ginibre(std::size_t dim, Rng& rng) {
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = gaussian(rng);
  return m;
}

std::size_t state_dim(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 3) {
    throw DimensionError("random states cover 1 to 3 qubits");
  }
  return std::size_t{1} << n_qubits;
}

}  // namespace

DensityMatrix random_density_matrix(int n_qubits, Rng& rng) {
  const ComplexMatrix m = ginibre(state_dim(n_qubits), rng);
  ComplexMatrix rho = m * m.adjoint();
  rho *= 1.0 / rho.trace().real();
  return DensityMatrix(std::move(rho));
}

std::vector<Complex> random_pure_vector(int n_qubits, Rng& rng) {
  std::vector<Complex> v(state_dim(n_qubits));
  double norm = 0.0;
  for (Complex& z : v) {
    z = gaussian(rng);
    norm += std::norm(z);
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (Complex& z : v) z *= scale;
  return v;
}

DensityMatrix random_pure_state(int n_qubits, Rng& rng) {
  return DensityMatrix(projector(random_pure_vector(n_qubits, rng)));
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix q = ginibre(dim, rng);
  // Modified Gram-Schmidt over the columns.
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      Complex overlap{};
      for (std::size_t r = 0; r < dim; ++r)
        overlap += std::conj(q(r, prev)) * q(r, c);
      for (std::size_t r = 0; r < dim; ++r) q(r, c) -= overlap * q(r, prev);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += std::norm(q(r, c));
    const double scale = 1.0 / std::sqrt(norm);
    for (std::size_t r = 0; r < dim; ++r) q(r, c) *= scale;
  }
  return q;
}

}  // namespace qcontrol
