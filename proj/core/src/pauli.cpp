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

#include "qcontrol/pauli.hpp"

#include <bit>
#include <string>

#include "qcontrol/density_matrix.hpp"
#include "qcontrol/errors.hpp"

namespace qcontrol {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_pauli_index(int index) {
  if (index < 0 || index > 3) {
    throw DomainError("Pauli index " + std::to_string(index) +
                      " is outside 0..3");
  }
}

std::size_t power_of_four(int n) { return std::size_t{1} << (2 * n); }

}  // namespace

int qubit_position(QubitLabel q) noexcept { return static_cast<int>(q); }

char qubit_name(QubitLabel q) noexcept {
  return static_cast<char>('A' + qubit_position(q));
}

QubitLabel qubit_from_position(int position) {
  if (position < 0 || position >= kMaxQubits) {
    throw DomainError("no qubit at position " + std::to_string(position));
  }
  return static_cast<QubitLabel>(position);
}

int QubitSet::size() const noexcept { return std::popcount(bits_); }

ComplexMatrix pauli(int index) {
  require_pauli_index(index);
  switch (index) {
    case 0:
      return ComplexMatrix(2, {1.0, 0.0, 0.0, 1.0});
    case 1:
      return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0});
    case 2:
      return ComplexMatrix(2, {0.0, -kI, kI, 0.0});
    default:
      return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0});
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  if (da * db > kMaxDim) {
    throw DimensionError("Kronecker product dimension " +
                         std::to_string(da * db) + " exceeds 16");
  }
  ComplexMatrix out(da * db);
  for (std::size_t ra = 0; ra < da; ++ra)
    for (std::size_t ca = 0; ca < da; ++ca) {
      const Complex x = a(ra, ca);
      if (x == Complex{}) continue;
      for (std::size_t rb = 0; rb < db; ++rb)
        for (std::size_t cb = 0; cb < db; ++cb)
          out(ra * db + rb, ca * db + cb) = x * b(rb, cb);
    }
  return out;
}

ComplexMatrix pauli_string(int n_qubits, std::span<const int> indices) {
  if (n_qubits < 1 || static_cast<std::size_t>(n_qubits) != indices.size()) {
    throw DomainError("pauli_string: expected " + std::to_string(n_qubits) +
                      " indices, got " + std::to_string(indices.size()));
  }
  ComplexMatrix out = pauli(indices[0]);
  for (std::size_t i = 1; i < indices.size(); ++i)
    out = kron(out, pauli(indices[i]));
  return out;
}

ComplexMatrix pauli_string(int n_qubits, std::initializer_list<int> indices) {
  return pauli_string(n_qubits,
                      std::span<const int>(indices.begin(), indices.size()));
}

std::string pauli_label(std::span<const int> indices) {
  static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
  std::string label;
  for (int i : indices) {
    require_pauli_index(i);
    label.push_back(kNames[i]);
  }
  return label;
}

PauliDecomposition::PauliDecomposition(int n_qubits)
    : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits + 1) {
    throw DimensionError("PauliDecomposition supports 1 to 4 qubits");
  }
  coeffs_.assign(power_of_four(n_qubits), 0.0);
  coeffs_[0] = 1.0;
}

PauliDecomposition::PauliDecomposition(int n_qubits, std::vector<double> coeffs)
    : PauliDecomposition(n_qubits) {
  if (coeffs.size() != coeffs_.size()) {
    throw DimensionError("PauliDecomposition: expected " +
                         std::to_string(coeffs_.size()) + " coefficients");
  }
  coeffs_ = std::move(coeffs);
}

std::size_t PauliDecomposition::flat_index(std::span<const int> indices) const {
  if (indices.size() != static_cast<std::size_t>(n_qubits_)) {
    throw DomainError("Pauli string length does not match qubit count");
  }
  std::size_t flat = 0;
  for (int i : indices) {
    require_pauli_index(i);
    flat = flat * 4 + static_cast<std::size_t>(i);
  }
  return flat;
}

double PauliDecomposition::coeff(std::span<const int> indices) const {
  return coeffs_[flat_index(indices)];
}

double PauliDecomposition::coeff(std::initializer_list<int> indices) const {
  return coeff(std::span<const int>(indices.begin(), indices.size()));
}

void PauliDecomposition::set_coeff(std::span<const int> indices, double value) {
  coeffs_[flat_index(indices)] = value;
}

void PauliDecomposition::set_coeff(std::initializer_list<int> indices,
                                   double value) {
  set_coeff(std::span<const int>(indices.begin(), indices.size()), value);
}

std::vector<int> PauliDecomposition::indices_of(std::size_t flat) const {
  std::vector<int> indices(static_cast<std::size_t>(n_qubits_));
  for (int q = n_qubits_ - 1; q >= 0; --q) {
    indices[static_cast<std::size_t>(q)] = static_cast<int>(flat % 4);
    flat /= 4;
  }
  return indices;
}

PauliDecomposition decompose_matrix(const ComplexMatrix& m, int n_qubits) {
  if (m.dim() != (std::size_t{1} << n_qubits)) {
    throw DimensionError("decompose: matrix dimension does not match " +
                         std::to_string(n_qubits) + " qubits");
  }
  PauliDecomposition d(n_qubits);
  const std::size_t dim = m.dim();
  for (std::size_t flat = 0; flat < d.size(); ++flat) {
    const std::vector<int> idx = d.indices_of(flat);
    const ComplexMatrix p = pauli_string(n_qubits, idx);
    Complex tr{};
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) tr += m(r, c) * p(c, r);
    d.coeffs_[flat] = tr.real();
    d.max_imag_ = std::max(d.max_imag_, std::abs(tr.imag()));
  }
  return d;
}

PauliDecomposition decompose(const DensityMatrix& rho) {
  return decompose_matrix(rho.matrix(), rho.n_qubits());
}

ComplexMatrix reconstruct(const PauliDecomposition& d) {
  const int n = d.n_qubits();
  ComplexMatrix out(std::size_t{1} << n);
  for (std::size_t flat = 0; flat < d.size(); ++flat) {
    const double c = d.coeffs()[flat];
    if (c == 0.0) continue;
    out += c * pauli_string(n, d.indices_of(flat));
  }
  out *= 1.0 / static_cast<double>(out.dim());
  return out;
}

}  // namespace qcontrol
