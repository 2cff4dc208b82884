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

#include <doctest.h>

#include <cmath>
#include <numeric>

#include "entbound/error.hpp"
#include "entbound/measures.hpp"
#include "entbound/states.hpp"
#include "oracles.hpp"

using namespace entbound;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::IOError;
}

double fidelity(const ComplexVector& a, const ComplexVector& b) {
  cplx ov{0.0, 0.0};
  for (std::size_t k = 0; k < a.size(); ++k) ov += std::conj(a[k]) * b[k];
  return std::norm(ov);
}

ComplexVector basis_vec(std::size_t n, std::size_t k) {
  ComplexVector v(n, cplx{0.0, 0.0});
  v[k] = 1.0;
  return v;
}

}  // namespace

TEST_CASE("SchmidtVector validation") {
  CHECK_NOTHROW(SchmidtVector({0.5, 0.3, 0.2}));
  CHECK(code_of([] { SchmidtVector({0.2, 0.3, 0.5}); }) == ErrorCode::DomainError);
  CHECK(code_of([] { SchmidtVector({0.5, 0.4}); }) == ErrorCode::NotNormalized);
  CHECK(code_of([] { SchmidtVector({1.5, -0.5}); }) == ErrorCode::DomainError);
  CHECK(code_of([] { SchmidtVector(std::vector<double>{}); }) == ErrorCode::WrongLength);
}

TEST_CASE("schmidt_decompose: named states") {
  const auto e0 = basis_vec(4, 0);
  const auto prod = schmidt_decompose(make_product(e0, e0));
  CHECK(prod.coefficients[0] == doctest::Approx(1.0));
  for (std::size_t k = 1; k < 4; ++k) CHECK(prod.coefficients[k] == doctest::Approx(0.0));

  const auto me = schmidt_decompose(make_max_entangled(4, 4));
  for (std::size_t k = 0; k < 4; ++k) CHECK(me.coefficients[k] == doctest::Approx(0.25));

  CHECK(code_of([] { schmidt_decompose(PureState{2, 2, {1.0, 1.0, 0.0, 0.0}}); }) ==
        ErrorCode::NotNormalized);
}

TEST_CASE("schmidt_decompose: random states against the SVD oracle") {
  Rng rng(21);
  for (auto [da, db] : {std::pair<std::size_t, std::size_t>{4, 6}, {4, 4}, {6, 4}, {2, 3}}) {
    for (int t = 0; t < 10; ++t) {
      const PureState psi = haar_random_pure(da, db, rng);
      const auto sd = schmidt_decompose(psi);
      const auto want = oracle::schmidt_by_svd(psi);
      const std::size_t d = std::min(da, db);
      REQUIRE(sd.coefficients.size() == d);
      CHECK(sd.swapped == (da > db));
      // Oracle returns dA values; the extra ones are zero.
      for (std::size_t k = 0; k < d; ++k) CHECK(std::abs(sd.coefficients[k] - want[k]) < 1e-9);
      CHECK(fidelity(sd.reconstruct(), psi.amplitudes) >= 1.0 - 1e-10);
    }
  }
}

TEST_CASE("schmidt_decompose: degenerate and rank-deficient states reconstruct") {
  const SchmidtVector mu({0.5, 0.5, 0.0, 0.0});
  const PureState psi = make_schmidt_state(mu, 6, 1);
  const auto sd = schmidt_decompose(psi);
  CHECK(fidelity(sd.reconstruct(), psi.amplitudes) >= 1.0 - 1e-10);
  for (std::size_t k = 0; k < 4; ++k) CHECK(sd.coefficients[k] == doctest::Approx(mu[k]));
}

TEST_CASE("haar_random_pure: determinism and normalization") {
  const PureState a = haar_random_pure(4, 4, 99);
  const PureState b = haar_random_pure(4, 4, 99);
  CHECK(a.amplitudes == b.amplitudes);
  CHECK(haar_random_pure(4, 4, 100).amplitudes != a.amplitudes);
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) CHECK_NOTHROW(haar_random_pure(4, 4, rng).validate());
}

TEST_CASE("haar_random_pure: 2x2 mean of the largest Schmidt coefficient") {
  // Oracle: for Haar 2x2 states the eigenvalue density is proportional to
  // (l1 - l2)^2, so x = l1 - l2 has density 3x^2 on [0,1] and
  // E[l1] = 1/2 + E[x]/2 = 7/8.
  Rng rng(2026);
  constexpr int kSamples = 100000;
  double sum = 0.0;
  for (int t = 0; t < kSamples; ++t) sum += schmidt_decompose(haar_random_pure(2, 2, rng)).coefficients[0];
  CHECK(std::abs(sum / kSamples - 7.0 / 8.0) < 0.01);
}

TEST_CASE("make_isotropic") {
  const DensityMatrix mixed = make_isotropic(4, 1.0 / 16.0);
  CHECK(max_abs_diff(mixed.matrix, ComplexMatrix::identity(16) * cplx{1.0 / 16.0, 0.0}) < 1e-15);
  CHECK(negativity(mixed) == doctest::Approx(0.0).epsilon(1e-12));

  for (std::size_t d : {2u, 3u, 4u, 5u}) {
    const DensityMatrix pure = make_isotropic(d, 1.0);
    // Oracle: negativity of P+ from the partial transpose spectrum.
    const auto ev = oracle::bisection_eigenvalues(partial_transpose(pure.matrix, d, d, Subsystem::A));
    double abs_sum = 0.0;
    for (double e : ev) abs_sum += std::abs(e);
    CHECK(negativity(pure) == doctest::Approx((abs_sum - 1.0) / 2.0).epsilon(1e-9));
    CHECK(negativity(pure) == doctest::Approx((d - 1.0) / 2.0).epsilon(1e-9));
  }
  CHECK(negativity(make_isotropic(4, 1.0)) == doctest::Approx(1.5).epsilon(1e-12));

  // <P+|rho|P+> = F.
  for (double f : {0.0, 0.3, 0.77, 1.0}) {
    const DensityMatrix rho = make_isotropic(4, f);
    const ComplexVector p = make_max_entangled(4, 4).amplitudes;
    const ComplexVector rp = rho.matrix.apply(p);
    cplx ov{0.0, 0.0};
    for (std::size_t k = 0; k < p.size(); ++k) ov += std::conj(p[k]) * rp[k];
    CHECK(std::abs(ov.real() - f) < 1e-12);
    CHECK_NOTHROW(rho.validate());
  }
  CHECK(code_of([] { make_isotropic(4, 1.2); }) == ErrorCode::DomainError);
  CHECK(code_of([] { make_isotropic(4, -0.1); }) == ErrorCode::DomainError);
}

TEST_CASE("make_max_entangled") {
  const auto s2 = schmidt_decompose(make_max_entangled(2, 5));
  CHECK(s2.coefficients[0] == doctest::Approx(0.5));
  CHECK(s2.coefficients[1] == doctest::Approx(0.5));
  const auto s4 = schmidt_decompose(make_max_entangled(4, 6)).coefficients;
  CHECK(nhat_phi(s4) == doctest::Approx(1.5));
  CHECK(pure_negativity(s4) == doctest::Approx(1.5));
  CHECK(code_of([] { make_max_entangled(4, 3); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("make_product") {
  Rng rng(5);
  ComplexVector a(4);
  ComplexVector b(4);
  for (auto& z : a) z = cplx{rng.normal(), rng.normal()};
  for (auto& z : b) z = cplx{rng.normal(), rng.normal()};
  auto normalize = [](ComplexVector& v) {
    double n = 0.0;
    for (const auto& z : v) n += std::norm(z);
    for (auto& z : v) z /= std::sqrt(n);
  };
  normalize(a);
  normalize(b);
  const PureState p = make_product(a, b);
  const auto sd = schmidt_decompose(p);
  CHECK(sd.coefficients[0] == doctest::Approx(1.0));
  CHECK(sd.coefficients[1] < 1e-12);
  const DensityMatrix rho = to_density(p);
  CHECK(std::abs(negativity(rho)) < 1e-9);
  CHECK(std::abs(phi_negativity(rho, AngularMomentumBasis::identity(4))) < 1e-9);
  ComplexVector bad(4, cplx{1.0, 0.0});
  CHECK(code_of([&] { make_product(bad, b); }) == ErrorCode::NotNormalized);
}

TEST_CASE("DensityMatrix validation") {
  CHECK_NOTHROW(make_isotropic(2, 0.5).validate());
  DensityMatrix bad{2, 2, ComplexMatrix::identity(4)};
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::NotNormalized);
  ComplexMatrix m = ComplexMatrix::identity(4) * cplx{0.25, 0.0};
  m(0, 1) = 0.1;
  CHECK(code_of([&] { DensityMatrix{2, 2, m}.validate(); }) == ErrorCode::NotHermitian);
  CHECK(code_of([&] { DensityMatrix{2, 3, ComplexMatrix::identity(4)}.validate(); }) ==
        ErrorCode::DimensionMismatch);
  // Hermitian, unit trace, not positive.
  ComplexMatrix neg = ComplexMatrix::diagonal(std::vector<double>{0.75, 0.75, -0.25, -0.25});
  CHECK(code_of([&] { DensityMatrix{2, 2, neg}.validate(); }) == ErrorCode::DomainError);
}

TEST_CASE("state JSON round trip and errors") {
  const PureState psi = haar_random_pure(2, 3, 8);
  const AnyState back = parse_state_json(to_json(psi));
  REQUIRE(std::holds_alternative<PureState>(back));
  CHECK(std::get<PureState>(back).amplitudes == psi.amplitudes);

  const DensityMatrix rho = make_isotropic(2, 0.6);
  const AnyState back2 = parse_state_json(to_json(rho));
  REQUIRE(std::holds_alternative<DensityMatrix>(back2));
  CHECK(max_abs_diff(std::get<DensityMatrix>(back2).matrix, rho.matrix) == 0.0);

  // A list of rows is accepted too.
  const AnyState rows = parse_state_json(
      R"({"dimA":1,"dimB":2,"matrix":[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]})");
  CHECK(std::holds_alternative<DensityMatrix>(rows));

  try {
    parse_state_json("{\"dimA\": 2,\n \"dimB\": }");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(code_of([] { parse_state_json(R"({"dimA":2})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_state_json(R"({"dimA":2,"dimB":2,"amplitudes":[1,0,0]})"); }) ==
        ErrorCode::DimensionMismatch);
  CHECK(code_of([] { load_state("/nonexistent/state.json"); }) == ErrorCode::IOError);
}
