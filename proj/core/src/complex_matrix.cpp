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

#include "qcontrol/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcontrol/errors.hpp"

namespace qcontrol {

namespace {

void require_supported(std::size_t dim) {
  if (!is_supported_dim(dim)) {
    throw DimensionError("matrix dimension " + std::to_string(dim) +
                         " is not a power of two in [2, 16]");
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

bool is_supported_dim(std::size_t dim) noexcept {
  return dim >= kMinDim && dim <= kMaxDim && (dim & (dim - 1)) == 0;
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) {
  require_supported(dim);
  entries_.assign(dim * dim, Complex{});
}

ComplexMatrix::ComplexMatrix(std::size_t dim,
                             std::initializer_list<Complex> row_major)
    : ComplexMatrix(dim,
                    std::span<const Complex>(row_major.begin(),
                                             row_major.size())) {}

ComplexMatrix::ComplexMatrix(std::size_t dim,
                             std::span<const Complex> row_major)
    : dim_(dim) {
  require_supported(dim);
  if (row_major.size() != dim * dim) {
    throw DimensionError("expected " + std::to_string(dim * dim) +
                         " entries, got " + std::to_string(row_major.size()));
  }
  entries_.assign(row_major.begin(), row_major.end());
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(*this);
  for (Complex& z : out.entries_) z = std::conj(z);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex sum{};
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
  m *= scalar;
  return m;
}

ComplexMatrix operator*(ComplexMatrix m, Complex scalar) {
  m *= scalar;
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

double hermiticity_error(const ComplexMatrix& m) {
  double worst = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = r; c < m.dim(); ++c)
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
  return worst;
}

double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const Complex& z : m.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& m) {
  return u * m * u.adjoint();
}

ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  if (ket.size() != bra.size()) {
    throw DimensionError("outer product of vectors with different lengths");
  }
  ComplexMatrix m(ket.size());
  for (std::size_t r = 0; r < ket.size(); ++r)
    for (std::size_t c = 0; c < bra.size(); ++c)
      m(r, c) = ket[r] * std::conj(bra[c]);
  return m;
}

ComplexMatrix projector(std::span<const Complex> ket) { return outer(ket, ket); }

std::vector<Complex> apply(const ComplexMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.dim()) {
    throw DimensionError("vector length does not match matrix dimension");
  }
  std::vector<Complex> out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

}  // namespace qcontrol
