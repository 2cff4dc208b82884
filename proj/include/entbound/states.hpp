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

#ifndef ENTBOUND_STATES_HPP
#define ENTBOUND_STATES_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "entbound/linalg.hpp"

namespace entbound {

inline constexpr double kNormTol = 1e-10;

/// Seeded generator with output that does not depend on the standard library
/// vendor: mt19937_64 is fully specified, and the uniform/normal transforms
/// below are ours rather than <random> distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller; caches the second variate.
  double normal();
  /// Gamma(shape, 1) by Marsaglia-Tsang (shape < 1 via the boost trick).
  double gamma(double shape);
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Ordered Schmidt coefficients. Construction validates; it never repairs.
class SchmidtVector {
 public:
  explicit SchmidtVector(std::vector<double> mu);

  std::size_t size() const noexcept { return mu_.size(); }
  double operator[](std::size_t i) const { return mu_[i]; }
  std::span<const double> values() const noexcept { return mu_; }

 private:
  std::vector<double> mu_;
};

struct PureState {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  ComplexVector amplitudes;  // index a * dim_b + b

  /// Throws DimensionMismatch / NotNormalized.
  void validate() const;
  ComplexMatrix density() const;
};

struct DensityMatrix {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  ComplexMatrix matrix;

  /// Hermitian and unit trace within 1e-10, min eigenvalue >= -1e-9.
  void validate() const;
};

DensityMatrix to_density(const PureState& psi);

struct SchmidtDecomposition {
  SchmidtVector coefficients;
  std::vector<ComplexVector> basis_a;  // |a_i>, length dim_a each
  std::vector<ComplexVector> basis_b;  // |b_i>, length dim_b each
  /// True when dim_a > dim_b and the roles were exchanged internally. The
  /// returned bases are always expressed in the caller's A and B spaces.
  bool swapped = false;

  /// sum_i sqrt(mu_i) |a_i> (x) |b_i>
  ComplexVector reconstruct() const;
};

SchmidtDecomposition schmidt_decompose(const PureState& psi);

PureState haar_random_pure(std::size_t dim_a, std::size_t dim_b, Rng& rng);
PureState haar_random_pure(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed);

/// F |Phi+><Phi+| + (1 - F)(I - |Phi+><Phi+|)/(D^2 - 1) on D x D.
DensityMatrix make_isotropic(std::size_t d, double fidelity);

/// sum_{i<D} |i>|i> / sqrt(D) in D x N.
PureState make_max_entangled(std::size_t d, std::size_t n);

PureState make_product(std::span<const cplx> state_a, std::span<const cplx> state_b);

/// Pure state sum_i sqrt(mu_i) |i>|b_i> with |b_i> = |offset + i> in dim_b.
PureState make_schmidt_state(const SchmidtVector& mu, std::size_t dim_b,
                             std::size_t offset = 0);

/// JSON I/O. Pure: {dimA, dimB, amplitudes:[[re,im],...]};
/// mixed: {dimA, dimB, matrix:[[re,im],...]} row-major.
using AnyState = std::variant<PureState, DensityMatrix>;
AnyState parse_state_json(const std::string& text);
AnyState load_state(const std::string& path);
std::string to_json(const PureState& psi);
std::string to_json(const DensityMatrix& rho);

}  // namespace entbound

#endif  // ENTBOUND_STATES_HPP
