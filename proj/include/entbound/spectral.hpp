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

#ifndef ENTBOUND_SPECTRAL_HPP
#define ENTBOUND_SPECTRAL_HPP

#include <cstddef>
#include <vector>

#include "entbound/states.hpp"

namespace entbound {

/// 1-based indices, p < q, q != D - p + 1.
struct AdmissiblePair {
  int p = 0;
  int q = 0;
};

/// Spectrum of (I (x) Phi)|psi><psi| for a D x D state whose B-side Schmidt
/// basis is the angular-momentum basis.
struct SpectrumSummary {
  std::size_t zero_count = 0;
  std::vector<double> pair_eigenvalues;  // mu_p + mu_q per admissible pair
  std::vector<double> r_roots;           // ascending

  /// All D^2 eigenvalues, descending.
  std::vector<double> all() const;
};

std::vector<AdmissiblePair> admissible_pairs(std::size_t d);

/// Sum over n-element pairwise admissible index sets of the product of mu.
double admissible_sum(std::size_t n, const SchmidtVector& mu);

/// Coefficients of r_D, lowest degree first; size D/2 + 1, last entry 1.
std::vector<double> r_poly_coeffs(std::size_t d, const SchmidtVector& mu);

/// All D/2 roots of r_D, ascending. The polynomial is real-rooted, so roots
/// are isolated between consecutive roots of its derivative and bisected;
/// a root at a critical point carries that point's multiplicity plus one.
std::vector<double> r_roots(std::size_t d, const SchmidtVector& mu);

SpectrumSummary predicted_spectrum(std::size_t d, const SchmidtVector& mu);

/// Builds the aligned state, diagonalizes (I (x) Phi) rho directly and returns
/// the largest gap to the predicted spectrum (both sorted).
double verify_against_direct(const SchmidtVector& mu, std::size_t d);

}  // namespace entbound

#endif  // ENTBOUND_SPECTRAL_HPP
