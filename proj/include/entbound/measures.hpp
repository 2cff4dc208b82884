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

#ifndef ENTBOUND_MEASURES_HPP
#define ENTBOUND_MEASURES_HPP

#include <cstddef>

#include "entbound/linalg.hpp"
#include "entbound/states.hpp"

namespace entbound {

/// Columns of `unitary` are the |j,m> vectors, m descending, written in the
/// computational basis. The default is the identity.
struct AngularMomentumBasis {
  std::size_t dim = 0;
  ComplexMatrix unitary;

  static AngularMomentumBasis identity(std::size_t dim);
  /// Throws OddDimension, NotSquare, or DomainError if not unitary.
  static AngularMomentumBasis from_unitary(ComplexMatrix u);
};

/// Picks |j,m> so that the B-side Schmidt vectors of `decomp` sit on the
/// central D labels: column (N - D)/2 + i is |b_i>. Requires an unswapped
/// decomposition with even N; the rest of the columns are an arbitrary
/// orthonormal completion.
AngularMomentumBasis schmidt_aligned_basis(const SchmidtDecomposition& decomp);

struct MeasurePoint {
  double n_hat_phi = 0.0;
  double n_t = 0.0;
};

/// V_{m,m'} = (-1)^{j-m} delta_{m,-m'} with m descending. Throws OddDimension.
ComplexMatrix v_matrix(std::size_t d);

/// Phi(s) = Tr(s) I - s - V s^T V^dagger, taken in `basis`.
ComplexMatrix phi_map(const ComplexMatrix& sigma, const AngularMomentumBasis& basis);

/// (I (x) Phi) rho, returned in the computational basis.
ComplexMatrix apply_phi_B(const DensityMatrix& rho, const AngularMomentumBasis& basis);

/// D(D-1)/4 * (||(I (x) Phi) rho|| - (d_B - 2)) / (D - 2) with D = min(d_A, d_B).
/// For d_B = D this is the usual D(D-1)/4 [||.||/(D-2) - 1]. Needs D > 2.
double phi_negativity(const DensityMatrix& rho, const AngularMomentumBasis& basis);

/// (||rho^{T_A}|| - 1) / 2
double negativity(const DensityMatrix& rho);

double pure_negativity(const SchmidtVector& mu);
/// 3 sqrt((mu1 + mu4)(mu2 + mu3)); length 4 only.
double nhat_phi(const SchmidtVector& mu);
/// Entropy of entanglement in bits.
double eof_pure(const SchmidtVector& mu);
double tangle_pure(const SchmidtVector& mu);
double concurrence_pure(const SchmidtVector& mu);

MeasurePoint measure_point(const SchmidtVector& mu);

}  // namespace entbound

#endif  // ENTBOUND_MEASURES_HPP
