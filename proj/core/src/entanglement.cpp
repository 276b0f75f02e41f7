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

#include "qcontrol/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "qcontrol/eigen.hpp"
#include "qcontrol/errors.hpp"
#include "qcontrol/pauli.hpp"

namespace qcontrol {

namespace {

void require_two_qubits(const DensityMatrix& rho, const char* what) {
  if (rho.n_qubits() != 2) {
    throw DomainError(std::string(what) + " expects a two-qubit state");
  }
}

void require_three_qubits(const DensityMatrix& rho, const char* what) {
  if (rho.n_qubits() != 3) {
    throw DomainError(std::string(what) + " expects a three-qubit state");
  }
}

const ComplexMatrix& spin_flip() {
  static const ComplexMatrix yy = pauli_string(2, {2, 2});
  return yy;
}

}  // namespace

ConcurrenceResult concurrence(const DensityMatrix& rho) {
  require_two_qubits(rho, "concurrence");
  const EigenSystem es = hermitian_eigensystem(rho.matrix());
  const ComplexMatrix& yy = spin_flip();

  // Columns of `weighted` are sqrt(p_i) e_i; dropped components stay zero.
  ComplexMatrix weighted(4);
  for (std::size_t i = 0; i < 4; ++i) {
    const double p = es.values[i];
    if (p <= kConcurrenceRankFloor) continue;
    const double w = std::sqrt(p);
    for (std::size_t r = 0; r < 4; ++r) weighted(r, i) = w * es.vectors(r, i);
  }
  // tau = W^dagger (Y(x)Y) conj(W) is complex symmetric; its singular values
  // are the sqrt(lambda_i). They are read off as the nonnegative half of the
  // spectrum of the Hermitian embedding [[0, tau], [tau^dagger, 0]].
  const ComplexMatrix tau = weighted.adjoint() * yy * weighted.conjugate();
  ComplexMatrix embedding(8);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      embedding(r, 4 + c) = tau(r, c);
      embedding(4 + c, r) = std::conj(tau(r, c));
    }
  const std::vector<double> spectrum = hermitian_eigenvalues(embedding);

  ConcurrenceResult result;
  for (std::size_t i = 0; i < 4; ++i)
    result.sqrt_lambdas[i] = std::max(0.0, spectrum[i]);
  const auto& s = result.sqrt_lambdas;
  result.value = std::max(0.0, s[0] - s[1] - s[2] - s[3]);
  return result;
}

ComplexMatrix spin_flip_product(const DensityMatrix& rho) {
  require_two_qubits(rho, "spin_flip_product");
  const ComplexMatrix& yy = spin_flip();
  return rho.matrix() * yy * rho.matrix().conjugate() * yy;
}

std::array<double, 4> concurrence_lambdas(const DensityMatrix& rho) {
  require_two_qubits(rho, "concurrence_lambdas");
  const EigenSystem es = hermitian_eigensystem(rho.matrix());
  std::vector<Complex> roots(4);
  for (std::size_t i = 0; i < 4; ++i)
    roots[i] = std::sqrt(std::max(0.0, es.values[i]));
  const ComplexMatrix sqrt_rho =
      es.vectors * ComplexMatrix::diagonal(roots) * es.vectors.adjoint();
  const ComplexMatrix& yy = spin_flip();
  const ComplexMatrix flipped = yy * rho.matrix().conjugate() * yy;
  const ComplexMatrix similar = sqrt_rho * flipped * sqrt_rho;

  const std::vector<double> values = hermitian_eigenvalues(similar);
  std::array<double, 4> lambdas{};
  for (std::size_t i = 0; i < 4; ++i) {
    const double v = values[i];
    lambdas[i] = (v < 0.0 && v > -kLambdaClip) ? 0.0 : v;
  }
  return lambdas;
}

double concurrence_one_interaction(double phi) { return std::abs(std::cos(phi)); }

double concurrence_two_interactions(double phi_a, double phi_b) {
  const double a = std::abs(std::cos(phi_a));
  const double b = std::abs(std::cos(phi_b));
  return 0.5 * std::max(0.0, a + a * b + b - 1.0);
}

double min_partial_transpose_eigenvalue(const DensityMatrix& rho, QubitSet on) {
  return min_eigenvalue(partial_transpose(rho, on));
}

bool ppt_holds(const DensityMatrix& rho, QubitSet on) {
  return min_partial_transpose_eigenvalue(rho, on) >= -kPptTolerance;
}

bool ppt_separable(const DensityMatrix& rho) {
  require_two_qubits(rho, "ppt_separable");
  return ppt_holds(rho, {QubitLabel::B});
}

double SeparableDecomposition::total_weight() const {
  double sum = 0.0;
  for (const ProductTerm& t : terms) sum += t.weight;
  return sum;
}

ComplexMatrix SeparableDecomposition::assemble() const {
  ComplexMatrix out(4);
  for (const ProductTerm& t : terms)
    out += t.weight * kron(t.state_a.matrix(), t.state_b.matrix());
  return out;
}

bool verify_decomposition(const DensityMatrix& rho,
                          const SeparableDecomposition& d) {
  if (rho.n_qubits() != 2) return false;
  for (const ProductTerm& t : d.terms) {
    if (!(t.weight >= 0.0) || !std::isfinite(t.weight)) return false;
    if (t.state_a.n_qubits() != 1 || t.state_b.n_qubits() != 1) return false;
  }
  return max_abs_diff(d.assemble(), rho.matrix()) <= kDecompositionTolerance;
}

double mermin_value(const DensityMatrix& rho, int j, int k) {
  require_three_qubits(rho, "mermin_value");
  if (j < 1 || j > 3 || k < 1 || k > 3) {
    throw DomainError("mermin_value: indices must lie in 1..3");
  }
  if (j == k) throw DomainError("mermin_value: requires j != k");
  return expectation(rho, pauli_string(3, {j, j, j})) -
         expectation(rho, pauli_string(3, {j, k, k})) -
         expectation(rho, pauli_string(3, {k, j, k})) -
         expectation(rho, pauli_string(3, {k, k, j}));
}

double mermin_max_abs(const DensityMatrix& rho) {
  double worst = 0.0;
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k)
      if (j != k) worst = std::max(worst, std::abs(mermin_value(rho, j, k)));
  return worst;
}

ComplexMatrix ghz_projector() {
  std::vector<Complex> ket(8);
  ket[0] = ket[7] = 1.0 / std::sqrt(2.0);
  return projector(ket);
}

ComplexMatrix w_projector() {
  std::vector<Complex> ket(8);
  ket[4] = ket[2] = ket[1] = 1.0 / std::sqrt(3.0);
  return projector(ket);
}

double ghz_fidelity(const DensityMatrix& rho) {
  require_three_qubits(rho, "ghz_fidelity");
  return expectation(rho, ghz_projector());
}

double w_fidelity(const DensityMatrix& rho) {
  require_three_qubits(rho, "w_fidelity");
  return expectation(rho, w_projector());
}

std::string Correlator::label() const { return pauli_label(indices); }

std::vector<Correlator> three_point_correlators(const DensityMatrix& rho) {
  require_three_qubits(rho, "three_point_correlators");
  std::vector<Correlator> table;
  table.reserve(27);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        table.push_back(
            {{a, b, c}, expectation(rho, pauli_string(3, {a, b, c}))});
  return table;
}

std::vector<Correlator> nonzero_correlators(std::span<const Correlator> table,
                                            double tolerance) {
  std::vector<Correlator> out;
  for (const Correlator& c : table)
    if (std::abs(c.value) > tolerance) out.push_back(c);
  return out;
}

}  // namespace qcontrol
