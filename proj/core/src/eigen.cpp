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

#include "qcontrol/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcontrol/errors.hpp"

namespace qcontrol {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

// One two-sided rotation J^dagger A J that zeroes A(p, q). J is a phase on
// column q (making A(p, q) real and nonnegative) followed by the classic real
// Jacobi rotation in the (p, q) plane.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double magnitude = std::abs(apq);
  if (magnitude == 0.0) return;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * magnitude);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex phase = std::conj(apq / magnitude);

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * phase;
  const Complex jqq = c * phase;

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * magnitude;
  a(q, q) = aqq + t * magnitude;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (hermiticity_error(m) > kHermitianInputTolerance) {
    throw DomainError("hermitian_eigensystem: input is not Hermitian");
  }
  const std::size_t n = m.dim();
  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold =
      kJacobiOffDiagonalTolerance * std::max(1.0, frobenius_norm(a));

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_norm(a) > threshold) {
    throw ConvergenceError("Jacobi eigensolver did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t col = 0; col < n; ++col) {
    out.values[col] = a(order[col], order[col]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, col) = v(r, order[col]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eigensystem(m).values;
}

double min_eigenvalue(const ComplexMatrix& m) {
  return hermitian_eigenvalues(m).back();
}

}  // namespace qcontrol
