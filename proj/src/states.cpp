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

#include "entbound/states.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "entbound/error.hpp"

namespace entbound {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

double Rng::gamma(double shape) {
  if (!(shape > 0.0)) throw Error(ErrorCode::DomainError, "gamma shape must be positive");
  if (shape < 1.0) {
    double u = 0.0;
    do {
      u = uniform();
    } while (u <= 0.0);
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

SchmidtVector::SchmidtVector(std::vector<double> mu) : mu_(std::move(mu)) {
  if (mu_.empty()) throw Error(ErrorCode::WrongLength, "empty Schmidt vector");
  double sum = 0.0;
  for (std::size_t i = 0; i < mu_.size(); ++i) {
    if (!(mu_[i] >= 0.0) || mu_[i] > 1.0 + kNormTol) {
      throw Error(ErrorCode::DomainError,
                  "Schmidt coefficient " + std::to_string(i) + " = " + std::to_string(mu_[i]));
    }
    if (i > 0 && mu_[i] > mu_[i - 1]) {
      throw Error(ErrorCode::DomainError, "Schmidt coefficients not descending at index " +
                                              std::to_string(i));
    }
    sum += mu_[i];
  }
  if (std::abs(sum - 1.0) > kNormTol) {
    throw Error(ErrorCode::NotNormalized, "Schmidt coefficients sum to " + std::to_string(sum));
  }
}

void PureState::validate() const {
  if (amplitudes.size() != dim_a * dim_b || dim_a == 0 || dim_b == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "pure state has " + std::to_string(amplitudes.size()) + " amplitudes for " +
                    std::to_string(dim_a) + "x" + std::to_string(dim_b));
  }
  double norm2 = 0.0;
  for (const auto& z : amplitudes) norm2 += std::norm(z);
  if (std::abs(norm2 - 1.0) > kNormTol) {
    throw Error(ErrorCode::NotNormalized, "squared norm " + std::to_string(norm2));
  }
}

ComplexMatrix PureState::density() const {
  return ComplexMatrix::outer(amplitudes, amplitudes);
}

void DensityMatrix::validate() const {
  const std::size_t n = dim_a * dim_b;
  if (matrix.rows() != n || matrix.cols() != n || n == 0) {
    throw Error(ErrorCode::DimensionMismatch, "density matrix shape does not match dims");
  }
  if (!matrix.is_hermitian(kNormTol)) throw Error(ErrorCode::NotHermitian, "density matrix");
  const cplx tr = matrix.trace();
  if (std::abs(tr - cplx{1.0, 0.0}) > kNormTol) {
    throw Error(ErrorCode::NotNormalized, "trace " + std::to_string(tr.real()));
  }
  const auto ev = hermitian_eigenvalues(matrix, kNormTol);
  if (ev.back() < -1e-9) {
    throw Error(ErrorCode::DomainError, "negative eigenvalue " + std::to_string(ev.back()));
  }
}

DensityMatrix to_density(const PureState& psi) {
  return DensityMatrix{psi.dim_a, psi.dim_b, psi.density()};
}

ComplexVector SchmidtDecomposition::reconstruct() const {
  const std::size_t na = basis_a.front().size();
  const std::size_t nb = basis_b.front().size();
  ComplexVector out(na * nb, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const double s = std::sqrt(coefficients[i]);
    if (s == 0.0) continue;
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < nb; ++b)
        out[a * nb + b] += s * basis_a[i][a] * basis_b[i][b];
  }
  return out;
}

namespace {

// Orthonormalize v against `done`; returns false if nothing is left.
bool orthonormalize(ComplexVector& v, const std::vector<ComplexVector>& done) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& u : done) {
      cplx overlap{0.0, 0.0};
      for (std::size_t k = 0; k < v.size(); ++k) overlap += std::conj(u[k]) * v[k];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= overlap * u[k];
    }
  }
  double norm2 = 0.0;
  for (const auto& z : v) norm2 += std::norm(z);
  if (norm2 < 1e-20) return false;
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : v) z *= inv;
  return true;
}

}  // namespace

SchmidtDecomposition schmidt_decompose(const PureState& psi) {
  psi.validate();
  const bool swapped = psi.dim_a > psi.dim_b;
  const std::size_t m = swapped ? psi.dim_b : psi.dim_a;  // small side
  const std::size_t n = swapped ? psi.dim_a : psi.dim_b;  // large side

  // coef(s, l): amplitude with small-side index s and large-side index l.
  auto coef = [&](std::size_t s, std::size_t l) {
    return swapped ? psi.amplitudes[l * psi.dim_b + s] : psi.amplitudes[s * psi.dim_b + l];
  };

  ComplexMatrix reduced(m, m);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      cplx acc{0.0, 0.0};
      for (std::size_t l = 0; l < n; ++l) acc += coef(s, l) * std::conj(coef(t, l));
      reduced(s, t) = acc;
    }
  const HermitianSpectrum spec = hermitian_eig(reduced);

  std::vector<double> mu(m);
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mu[i] = std::max(spec.eigenvalues[i], 0.0);
    sum += mu[i];
  }
  for (auto& x : mu) x /= sum;

  std::vector<ComplexVector> small_basis(m);
  std::vector<ComplexVector> large_basis;
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < m; ++i) {
    small_basis[i] = spec.eigenvectors.column(i);
    ComplexVector v(n, cplx{0.0, 0.0});
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t s = 0; s < m; ++s) v[l] += std::conj(small_basis[i][s]) * coef(s, l);
    if (mu[i] > 1e-20 && orthonormalize(v, large_basis)) {
      large_basis.push_back(std::move(v));
    } else {
      pending.push_back(i);
      large_basis.push_back(ComplexVector(n, cplx{0.0, 0.0}));
    }
  }
  // Zero-weight partners: any orthonormal completion will do.
  std::size_t next_unit = 0;
  for (std::size_t i : pending) {
    std::vector<ComplexVector> others;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i && std::find(pending.begin(), pending.end(), j) == pending.end()) {
        others.push_back(large_basis[j]);
      }
    for (std::size_t j : pending)
      if (j < i) others.push_back(large_basis[j]);
    for (;; ++next_unit) {
      ComplexVector e(n, cplx{0.0, 0.0});
      e[next_unit] = 1.0;
      if (orthonormalize(e, others)) {
        large_basis[i] = std::move(e);
        ++next_unit;
        break;
      }
    }
  }

  // Conjugation convention: psi = sum_i sqrt(mu_i) |s_i> (x) |l_i> where the
  // small-side factor is the eigenvector itself.
  SchmidtDecomposition out{SchmidtVector(std::move(mu)), {}, {}, swapped};
  if (swapped) {
    out.basis_a = std::move(large_basis);
    out.basis_b = std::move(small_basis);
  } else {
    out.basis_a = std::move(small_basis);
    out.basis_b = std::move(large_basis);
  }
  return out;
}

PureState haar_random_pure(std::size_t dim_a, std::size_t dim_b, Rng& rng) {
  if (dim_a < 2 || dim_b < 2) throw Error(ErrorCode::DomainError, "dims must be >= 2");
  PureState psi{dim_a, dim_b, ComplexVector(dim_a * dim_b)};
  double norm2 = 0.0;
  for (auto& z : psi.amplitudes) {
    const double re = rng.normal();
    const double im = rng.normal();
    z = cplx{re, im};
    norm2 += re * re + im * im;
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : psi.amplitudes) z *= inv;
  return psi;
}

PureState haar_random_pure(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_pure(dim_a, dim_b, rng);
}

DensityMatrix make_isotropic(std::size_t d, double fidelity) {
  if (d < 2) throw Error(ErrorCode::DomainError, "isotropic state needs D >= 2");
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw Error(ErrorCode::DomainError, "fidelity " + std::to_string(fidelity));
  }
  const PureState phi = make_max_entangled(d, d);
  const ComplexMatrix p = phi.density();
  const double noise = (1.0 - fidelity) / static_cast<double>(d * d - 1);
  ComplexMatrix rho = (ComplexMatrix::identity(d * d) - p) * cplx{noise, 0.0};
  rho += p * cplx{fidelity, 0.0};
  return DensityMatrix{d, d, std::move(rho)};
}

PureState make_max_entangled(std::size_t d, std::size_t n) {
  if (d == 0 || d > n) {
    throw Error(ErrorCode::DimensionMismatch,
                "need D <= N, got " + std::to_string(d) + "x" + std::to_string(n));
  }
  PureState psi{d, n, ComplexVector(d * n, cplx{0.0, 0.0})};
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) psi.amplitudes[i * n + i] = amp;
  return psi;
}

PureState make_product(std::span<const cplx> state_a, std::span<const cplx> state_b) {
  auto check = [](std::span<const cplx> v, const char* which) {
    double norm2 = 0.0;
    for (const auto& z : v) norm2 += std::norm(z);
    if (v.empty() || std::abs(norm2 - 1.0) > kNormTol) {
      throw Error(ErrorCode::NotNormalized, std::string(which) + " factor");
    }
  };
  check(state_a, "A");
  check(state_b, "B");
  return PureState{state_a.size(), state_b.size(), kron(state_a, state_b)};
}

PureState make_schmidt_state(const SchmidtVector& mu, std::size_t dim_b, std::size_t offset) {
  const std::size_t d = mu.size();
  if (offset + d > dim_b) {
    throw Error(ErrorCode::DimensionMismatch, "Schmidt support does not fit in dim_b");
  }
  PureState psi{d, dim_b, ComplexVector(d * dim_b, cplx{0.0, 0.0})};
  for (std::size_t i = 0; i < d; ++i) psi.amplitudes[i * dim_b + offset + i] = std::sqrt(mu[i]);
  return psi;
}

namespace {

using nlohmann::json;

cplx parse_complex(const json& v) {
  if (v.is_number()) return cplx{v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw Error(ErrorCode::ParseError, "expected [re, im], got " + v.dump());
  }
  return cplx{v[0].get<double>(), v[1].get<double>()};
}

json complex_array(std::span<const cplx> values) {
  json arr = json::array();
  for (const auto& z : values) arr.push_back({z.real(), z.imag()});
  return arr;
}

}  // namespace

AnyState parse_state_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("dimA") || !doc.contains("dimB")) {
    throw Error(ErrorCode::ParseError, "state JSON needs dimA and dimB");
  }
  std::size_t da = 0;
  std::size_t db = 0;
  try {
    da = doc.at("dimA").get<std::size_t>();
    db = doc.at("dimB").get<std::size_t>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }

  if (doc.contains("amplitudes")) {
    const json& arr = doc["amplitudes"];
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, "amplitudes must be an array");
    PureState psi{da, db, {}};
    for (const auto& v : arr) psi.amplitudes.push_back(parse_complex(v));
    psi.validate();
    return psi;
  }
  if (doc.contains("matrix")) {
    const json& arr = doc["matrix"];
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, "matrix must be an array");
    std::vector<cplx> entries;
    // Accept both a flat row-major list and a list of rows.
    for (const auto& v : arr) {
      if (v.is_array() && !v.empty() && v[0].is_array()) {
        for (const auto& w : v) entries.push_back(parse_complex(w));
      } else {
        entries.push_back(parse_complex(v));
      }
    }
    const std::size_t n = da * db;
    if (entries.size() != n * n) {
      throw Error(ErrorCode::DimensionMismatch, "matrix has " + std::to_string(entries.size()) +
                                                    " entries, expected " +
                                                    std::to_string(n * n));
    }
    DensityMatrix rho{da, db, ComplexMatrix(n, n, std::move(entries))};
    rho.validate();
    return rho;
  }
  throw Error(ErrorCode::ParseError, "state JSON needs amplitudes or matrix");
}

AnyState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IOError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::string to_json(const PureState& psi) {
  json doc;
  doc["dimA"] = psi.dim_a;
  doc["dimB"] = psi.dim_b;
  doc["amplitudes"] = complex_array(psi.amplitudes);
  return doc.dump();
}

std::string to_json(const DensityMatrix& rho) {
  json doc;
  doc["dimA"] = rho.dim_a;
  doc["dimB"] = rho.dim_b;
  doc["matrix"] = complex_array(rho.matrix.entries());
  return doc.dump();
}

}  // namespace entbound
