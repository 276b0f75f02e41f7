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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qcontrol {

using Complex = std::complex<double>;

inline constexpr std::size_t kMinDim = 2;
inline constexpr std::size_t kMaxDim = 16;

/// Dense square complex matrix of dimension 2, 4, 8 or 16.
///
/// Entries are stored row-major: entry (r, c) lives at index r * dim + c of
/// entries(). Every operator here is a plain value computation; there is no
/// aliasing or lazy evaluation.
class ComplexMatrix {
 public:
  /// Zero matrix. Throws DimensionError unless dim is a power of two in
  /// [2, 16].
  explicit ComplexMatrix(std::size_t dim);

  /// Builds a matrix from dim * dim row-major entries.
  ComplexMatrix(std::size_t dim, std::initializer_list<Complex> row_major);
  ComplexMatrix(std::size_t dim, std::span<const Complex> row_major);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> values);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * dim_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);

/// True when dim is a power of two in [kMinDim, kMaxDim].
bool is_supported_dim(std::size_t dim) noexcept;

/// Largest entrywise modulus of a - b. Dimensions must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entrywise modulus of m - m^dagger.
double hermiticity_error(const ComplexMatrix& m);

/// Frobenius norm.
double frobenius_norm(const ComplexMatrix& m);

/// u * m * u^dagger.
ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& m);

/// |ket><bra|.
ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

/// |ket><ket|.
ComplexMatrix projector(std::span<const Complex> ket);

/// m * v.
std::vector<Complex> apply(const ComplexMatrix& m, std::span<const Complex> v);

}  // namespace qcontrol
