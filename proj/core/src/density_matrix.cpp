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

#include "qcontrol/density_matrix.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qcontrol/eigen.hpp"
#include "qcontrol/errors.hpp"

namespace qcontrol {

namespace {

std::size_t bit_of(int n_qubits, int position) {
  return std::size_t{1} << (n_qubits - 1 - position);
}

// Scatters the low bits of `packed` onto the basis-index bits of the listed
// qubit positions (first position = most significant packed bit).
std::size_t scatter(std::size_t packed, const std::vector<int>& positions,
                    int n_qubits) {
  std::size_t full = 0;
  const std::size_t k = positions.size();
  for (std::size_t i = 0; i < k; ++i) {
    if ((packed >> (k - 1 - i)) & 1u) full |= bit_of(n_qubits, positions[i]);
  }
  return full;
}

void require_present(QubitSet set, int n_qubits, const char* what) {
  for (int q = n_qubits; q < kMaxQubits; ++q) {
    if (set.contains(qubit_from_position(q))) {
      throw DomainError(std::string(what) + ": qubit " +
                        qubit_name(qubit_from_position(q)) +
                        " is not part of a " + std::to_string(n_qubits) +
                        "-qubit state");
    }
  }
}

}  // namespace

int qubit_count(const ComplexMatrix& m) {
  const int n = std::countr_zero(m.dim());
  if (n < 1 || n > kMaxQubits + 1) {
    throw DimensionError("unsupported dimension " + std::to_string(m.dim()));
  }
  return n;
}

StateDiagnostics diagnose_state(const ComplexMatrix& m) {
  StateDiagnostics d;
  d.hermiticity_error = hermiticity_error(m);
  d.trace_error = std::abs(m.trace() - Complex{1.0});
  if (d.hermiticity_error <= kHermitianInputTolerance) {
    d.min_eigenvalue = min_eigenvalue(m);
  } else {
    d.min_eigenvalue = -std::numeric_limits<double>::infinity();
  }
  return d;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, int n_qubits, Unchecked)
    : matrix_(std::move(m)), n_qubits_(n_qubits) {}

DensityMatrix::DensityMatrix(ComplexMatrix m)
    : matrix_(std::move(m)), n_qubits_(qubit_count(matrix_)) {
  if (n_qubits_ > kMaxQubits) {
    throw DimensionError("density matrices cover 1 to 3 qubits");
  }
  const StateDiagnostics d = diagnose_state(matrix_);
  if (!d.valid()) {
    throw InvalidStateError(
        "not a density matrix: hermiticity error " +
        std::to_string(d.hermiticity_error) + ", trace error " +
        std::to_string(d.trace_error) + ", min eigenvalue " +
        std::to_string(d.min_eigenvalue));
  }
}

std::optional<DensityMatrix> DensityMatrix::try_from(ComplexMatrix m) {
  const int n = qubit_count(m);
  if (n > kMaxQubits || !diagnose_state(m).valid()) return std::nullopt;
  return DensityMatrix(std::move(m), n, Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DimensionError("density matrices cover 1 to 3 qubits");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityMatrix(std::move(m), n_qubits, Unchecked{});
}

DensityMatrix partial_trace(const DensityMatrix& rho, QubitSet keep) {
  const int n = rho.n_qubits();
  require_present(keep, n, "partial_trace");
  if (keep.empty() || keep.size() == n) {
    throw DomainError("partial_trace: keep set must be a nonempty proper subset");
  }
  std::vector<int> kept;
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    (keep.contains(qubit_from_position(q)) ? kept : traced).push_back(q);
  }

  const std::size_t out_dim = std::size_t{1} << kept.size();
  const std::size_t traced_dim = std::size_t{1} << traced.size();
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(out_dim);
  for (std::size_t r = 0; r < out_dim; ++r) {
    const std::size_t row = scatter(r, kept, n);
    for (std::size_t c = 0; c < out_dim; ++c) {
      const std::size_t col = scatter(c, kept, n);
      Complex sum{};
      for (std::size_t t = 0; t < traced_dim; ++t) {
        const std::size_t off = scatter(t, traced, n);
        sum += m(row | off, col | off);
      }
      out(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(out));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int n_qubits,
                                QubitSet on) {
  if (m.dim() != (std::size_t{1} << n_qubits)) {
    throw DimensionError("partial_transpose: dimension does not match qubits");
  }
  require_present(on, n_qubits, "partial_transpose");
  if (on.empty()) {
    throw DomainError("partial_transpose: no subsystem named");
  }
  std::size_t swap_mask = 0;
  for (int q = 0; q < n_qubits; ++q)
    if (on.contains(qubit_from_position(q))) swap_mask |= bit_of(n_qubits, q);

  ComplexMatrix out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const std::size_t diff = (r ^ c) & swap_mask;
      out(r ^ diff, c ^ diff) = m(r, c);
    }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, QubitSet on) {
  return partial_transpose(rho.matrix(), rho.n_qubits(), on);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double p : hermitian_eigenvalues(rho.matrix()))
    if (p > 0.0) s -= p * std::log(p);
  return s;
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& observable) {
  const ComplexMatrix& m = rho.matrix();
  if (observable.dim() != m.dim()) {
    throw DimensionError("expectation: observable dimension mismatch");
  }
  Complex tr{};
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) tr += m(r, c) * observable(c, r);
  return tr.real();
}

}  // namespace qcontrol
