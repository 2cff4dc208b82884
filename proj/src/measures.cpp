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

#include "entbound/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entbound/error.hpp"

namespace entbound {

namespace {

void require_even(std::size_t d, const char* what) {
  if (d < 2 || d % 2 != 0) {
    throw Error(ErrorCode::OddDimension, std::string(what) + ": dimension " + std::to_string(d));
  }
}

bool is_identity(const ComplexMatrix& u) {
  return max_abs_diff(u, ComplexMatrix::identity(u.rows())) == 0.0;
}

// V s^T V^dagger with V antidiagonal: entry (l, l') picks s(D-1-l', D-1-l)
// with sign (-1)^(l + l').
ComplexMatrix v_transpose_v(const ComplexMatrix& s) {
  const std::size_t d = s.rows();
  ComplexMatrix out(d, d);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t k = 0; k < d; ++k) {
      const double sign = ((l + k) % 2 == 0) ? 1.0 : -1.0;
      out(l, k) = sign * s(d - 1 - k, d - 1 - l);
    }
  return out;
}

void require_4(const SchmidtVector& mu, const char* what) {
  if (mu.size() != 4) {
    throw Error(ErrorCode::WrongLength,
                std::string(what) + " needs 4 coefficients, got " + std::to_string(mu.size()));
  }
}

}  // namespace

AngularMomentumBasis AngularMomentumBasis::identity(std::size_t dim) {
  require_even(dim, "AngularMomentumBasis");
  return {dim, ComplexMatrix::identity(dim)};
}

AngularMomentumBasis AngularMomentumBasis::from_unitary(ComplexMatrix u) {
  if (!u.is_square()) throw Error(ErrorCode::NotSquare, "basis unitary");
  require_even(u.rows(), "AngularMomentumBasis");
  if (!u.is_unitary(kDefaultHermitianTol)) {
    throw Error(ErrorCode::DomainError, "basis matrix is not unitary");
  }
  const std::size_t d = u.rows();
  return {d, std::move(u)};
}

AngularMomentumBasis schmidt_aligned_basis(const SchmidtDecomposition& decomp) {
  if (decomp.swapped) {
    throw Error(ErrorCode::DimensionMismatch, "Schmidt alignment needs dim_a <= dim_b");
  }
  const std::size_t n = decomp.basis_b.front().size();
  const std::size_t d = decomp.basis_b.size();
  require_even(n, "schmidt_aligned_basis");
  const std::size_t offset = (n - d) / 2;

  std::vector<ComplexVector> cols(n);
  std::vector<ComplexVector> placed;
  for (std::size_t i = 0; i < d; ++i) {
    cols[offset + i] = decomp.basis_b[i];
    placed.push_back(decomp.basis_b[i]);
  }
  std::size_t unit = 0;
  for (std::size_t l = 0; l < n; ++l) {
    if (l >= offset && l < offset + d) continue;
    for (;; ++unit) {
      ComplexVector e(n, cplx{0.0, 0.0});
      e[unit] = 1.0;
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& u : placed) {
          cplx ov{0.0, 0.0};
          for (std::size_t k = 0; k < n; ++k) ov += std::conj(u[k]) * e[k];
          for (std::size_t k = 0; k < n; ++k) e[k] -= ov * u[k];
        }
      double norm2 = 0.0;
      for (const auto& z : e) norm2 += std::norm(z);
      if (norm2 > 1e-6) {
        for (auto& z : e) z /= std::sqrt(norm2);
        cols[l] = e;
        placed.push_back(std::move(e));
        ++unit;
        break;
      }
    }
  }
  ComplexMatrix u(n, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k) u(k, l) = cols[l][k];
  return AngularMomentumBasis::from_unitary(std::move(u));
}

ComplexMatrix v_matrix(std::size_t d) {
  require_even(d, "v_matrix");
  ComplexMatrix v(d, d);
  // Row l has m = j - l; the partner column has m' = -m, i.e. index d-1-l,
  // and (-1)^{j-m} = (-1)^l.
  for (std::size_t l = 0; l < d; ++l) v(l, d - 1 - l) = (l % 2 == 0) ? 1.0 : -1.0;
  return v;
}

ComplexMatrix phi_map(const ComplexMatrix& sigma, const AngularMomentumBasis& basis) {
  if (!sigma.is_square()) throw Error(ErrorCode::NotSquare, "phi_map input");
  require_even(sigma.rows(), "phi_map");
  if (sigma.rows() != basis.dim) {
    throw Error(ErrorCode::DimensionMismatch, "phi_map: basis dimension differs from input");
  }
  const bool trivial = is_identity(basis.unitary);
  const ComplexMatrix s = trivial ? sigma : basis.unitary.adjoint() * sigma * basis.unitary;
  ComplexMatrix out = ComplexMatrix::identity(s.rows()) * s.trace();
  out -= s;
  out -= v_transpose_v(s);
  return trivial ? out : basis.unitary * out * basis.unitary.adjoint();
}

ComplexMatrix apply_phi_B(const DensityMatrix& rho, const AngularMomentumBasis& basis) {
  const std::size_t da = rho.dim_a;
  const std::size_t db = rho.dim_b;
  require_even(db, "apply_phi_B");
  if (basis.dim != db || rho.matrix.rows() != da * db || rho.matrix.cols() != da * db) {
    throw Error(ErrorCode::DimensionMismatch, "apply_phi_B: dimensions disagree");
  }
  const bool trivial = is_identity(basis.unitary);
  ComplexMatrix r = rho.matrix;
  ComplexMatrix lift;
  if (!trivial) {
    lift = kron(ComplexMatrix::identity(da), basis.unitary);
    r = lift.adjoint() * r * lift;
  }

  // Tr_B(r) (x) I - r - (I (x) V) r^{T_B} (I (x) V^dagger), done blockwise:
  // block (a, a') of the last term is V r_{a a'}^T V^dagger.
  const ComplexMatrix reduced = partial_trace(r, da, db, Subsystem::A);
  ComplexMatrix out(da * db, da * db);
  ComplexMatrix block(db, db);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t a2 = 0; a2 < da; ++a2) {
      for (std::size_t b = 0; b < db; ++b)
        for (std::size_t b2 = 0; b2 < db; ++b2) block(b, b2) = r(a * db + b, a2 * db + b2);
      const ComplexMatrix vtv = v_transpose_v(block);
      for (std::size_t b = 0; b < db; ++b)
        for (std::size_t b2 = 0; b2 < db; ++b2) {
          cplx value = -block(b, b2) - vtv(b, b2);
          if (b == b2) value += reduced(a, a2);
          out(a * db + b, a2 * db + b2) = value;
        }
    }
  return trivial ? out : lift * out * lift.adjoint();
}

double phi_negativity(const DensityMatrix& rho, const AngularMomentumBasis& basis) {
  const std::size_t d = std::min(rho.dim_a, rho.dim_b);
  const ComplexMatrix x = apply_phi_B(rho, basis);
  if (d <= 2) {
    throw Error(ErrorCode::DomainError, "phi_negativity needs min(dim_a, dim_b) > 2");
  }
  const double dd = static_cast<double>(d);
  const double trace_x = static_cast<double>(rho.dim_b - 2) * rho.matrix.trace().real();
  return dd * (dd - 1.0) / 4.0 * (trace_norm(x) - trace_x) / (dd - 2.0);
}

double negativity(const DensityMatrix& rho) {
  const ComplexMatrix pt = partial_transpose(rho.matrix, rho.dim_a, rho.dim_b, Subsystem::A);
  return (trace_norm(pt) - 1.0) / 2.0;
}

double pure_negativity(const SchmidtVector& mu) {
  double s = 0.0;
  for (double m : mu.values()) s += std::sqrt(m);
  return (s * s - 1.0) / 2.0;
}

double nhat_phi(const SchmidtVector& mu) {
  require_4(mu, "nhat_phi");
  return 3.0 * std::sqrt((mu[0] + mu[3]) * (mu[1] + mu[2]));
}

double eof_pure(const SchmidtVector& mu) {
  double h = 0.0;
  for (double m : mu.values())
    if (m > 0.0) h -= m * std::log2(m);
  return std::max(h, 0.0);
}

double tangle_pure(const SchmidtVector& mu) {
  double p = 0.0;
  for (double m : mu.values()) p += m * m;
  return std::max(2.0 * (1.0 - p), 0.0);
}

double concurrence_pure(const SchmidtVector& mu) { return std::sqrt(tangle_pure(mu)); }

MeasurePoint measure_point(const SchmidtVector& mu) {
  require_4(mu, "measure_point");
  return {nhat_phi(mu), pure_negativity(mu)};
}

}  // namespace entbound
