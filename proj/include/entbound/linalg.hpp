// Copyright 2026 The entbound Authors
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

#ifndef ENTBOUND_LINALG_HPP
#define ENTBOUND_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace entbound {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

inline constexpr double kDefaultHermitianTol = 1e-10;

/// Dense row-major complex matrix. Sizes here never exceed a few dozen rows,
/// so there is no blocking, no sparsity and no expression templates.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> diag);
  /// |v><w|
  static ComplexMatrix outer(std::span<const cplx> v, std::span<const cplx> w);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const cplx> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  cplx trace() const;
  double frobenius_norm() const;
  /// max |a_ij - conj(a_ji)|
  double hermitian_defect() const;

  bool is_hermitian(double tol = kDefaultHermitianTol) const;
  bool is_unitary(double tol = kDefaultHermitianTol) const;

  ComplexVector column(std::size_t j) const;
  ComplexVector apply(std::span<const cplx> v) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// max |a_ij - b_ij|; matrices must share a shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianSpectrum {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // column k belongs to eigenvalues[k]
};

/// Cyclic complex Jacobi. Throws NotSquare / NotHermitian (max|a - a^dagger| > tol)
/// and ConvergenceFailure after 100 sweeps.
HermitianSpectrum hermitian_eig(const ComplexMatrix& a, double tol = kDefaultHermitianTol);

/// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          double tol = kDefaultHermitianTol);

/// Tr sqrt(a a^dagger). Hermitian input takes the sum of |eigenvalues|; anything
/// else goes through the eigenvalues of a^dagger a.
double trace_norm(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(std::span<const cplx> a, std::span<const cplx> b);

enum class Subsystem { A, B };

/// Row index of |i_a, i_b> is i_a * dim_b + i_b.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t dim_a,
                                std::size_t dim_b, Subsystem subsystem);

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t dim_a,
                            std::size_t dim_b, Subsystem keep);

}  // namespace entbound

#endif  // ENTBOUND_LINALG_HPP
