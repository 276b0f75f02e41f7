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

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qcontrol/complex_matrix.hpp"

namespace qcontrol {

/// Qubit names. Tensor products are always ordered A (x) B (x) C with A the
/// most significant bit of a basis index. Every partial operation derives
/// its index arithmetic from this ordering.
enum class QubitLabel : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr int kMaxQubits = 3;

int qubit_position(QubitLabel q) noexcept;
char qubit_name(QubitLabel q) noexcept;
QubitLabel qubit_from_position(int position);

/// A small set of qubit labels.
class QubitSet {
 public:
  constexpr QubitSet() = default;
  constexpr QubitSet(std::initializer_list<QubitLabel> labels) {
    for (QubitLabel q : labels) bits_ |= bit(q);
  }

  /// Bit k of mask selects the qubit at position k (A is bit 0).
  static constexpr QubitSet from_mask(std::uint8_t mask) noexcept {
    QubitSet out;
    out.bits_ = static_cast<std::uint8_t>(mask & 0x7u);
    return out;
  }

  constexpr bool contains(QubitLabel q) const noexcept {
    return (bits_ & bit(q)) != 0;
  }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept;
  constexpr std::uint8_t mask() const noexcept { return bits_; }

  constexpr bool operator==(const QubitSet&) const = default;

 private:
  static constexpr std::uint8_t bit(QubitLabel q) noexcept {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(q));
  }
  std::uint8_t bits_ = 0;
};

/// Pauli index convention: 0 = identity, 1 = x, 2 = y, 3 = z, with the
/// standard signs (y = [[0, -i], [i, 0]]).
ComplexMatrix pauli(int index);

/// Kronecker product a (x) b. Throws DimensionError if the result would
/// exceed kMaxDim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// pauli(indices[0]) (x) pauli(indices[1]) (x) ... for n_qubits factors.
ComplexMatrix pauli_string(int n_qubits, std::span<const int> indices);
ComplexMatrix pauli_string(int n_qubits, std::initializer_list<int> indices);

/// Pauli-string label such as "IXZ" for indices {0, 1, 3}.
std::string pauli_label(std::span<const int> indices);

/// Real expansion coefficients of a state over Pauli strings:
///
///   rho = 2^-n * sum_s coeff(s) * P_s,   coeff(s) = tr(rho * P_s).
///
/// Coefficients are stored with qubit A's index as the most significant
/// base-4 digit, so for two qubits coeff(j, k) sits at 4 * j + k. The
/// all-identity coefficient is 1 for every trace-one matrix.
class PauliDecomposition {
 public:
  /// All-zero coefficients except the identity string (maximally mixed).
  explicit PauliDecomposition(int n_qubits);
  PauliDecomposition(int n_qubits, std::vector<double> coeffs);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  double coeff(std::span<const int> indices) const;
  double coeff(std::initializer_list<int> indices) const;
  void set_coeff(std::span<const int> indices, double value);
  void set_coeff(std::initializer_list<int> indices, double value);

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  std::span<double> coeffs() noexcept { return coeffs_; }

  /// Pauli indices of the string stored at flat position `flat`.
  std::vector<int> indices_of(std::size_t flat) const;

  /// Largest imaginary part discarded by decompose(); 0 for hand-built
  /// decompositions.
  double max_discarded_imaginary() const noexcept { return max_imag_; }

 private:
  friend PauliDecomposition decompose_matrix(const ComplexMatrix&, int);
  std::size_t flat_index(std::span<const int> indices) const;

  int n_qubits_;
  std::vector<double> coeffs_;
  double max_imag_ = 0.0;
};

class DensityMatrix;

/// coeff(s) = Re tr(rho * P_s) for every Pauli string s.
PauliDecomposition decompose(const DensityMatrix& rho);

/// Same expansion for an arbitrary 2^n x 2^n matrix; imaginary parts are
/// dropped but recorded in max_discarded_imaginary().
PauliDecomposition decompose_matrix(const ComplexMatrix& m, int n_qubits);

/// Inverse of decompose. The result is Hermitian with trace coeff(0...0)
/// but is not checked for positivity: wrap it in a DensityMatrix to
/// validate.
ComplexMatrix reconstruct(const PauliDecomposition& d);

}  // namespace qcontrol
