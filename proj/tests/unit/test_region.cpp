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
#include <optional>
#include <vector>

#include "entbound/error.hpp"
#include "entbound/measures.hpp"
#include "entbound/region.hpp"
#include "entbound/states.hpp"
#include "oracles.hpp"

using namespace entbound;

namespace {

double dist(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("lower and upper boundaries") {
  CHECK(lower_boundary(0.0) == 0.0);
  CHECK(lower_boundary(1.5) == doctest::Approx(0.5));
  CHECK(lower_boundary(0.9) == doctest::Approx(0.3));
  CHECK(upper_boundary(0.0) == doctest::Approx(0.0));
  CHECK(upper_boundary(1.5) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(upper_boundary(std::sqrt(2.0)) == doctest::Approx(0.75 * (2.0 / 3.0 + 2.0 / std::sqrt(3.0))).epsilon(1e-12));
  CHECK(upper_boundary(std::sqrt(2.0)) == doctest::Approx(1.3660).epsilon(1e-4));
  for (int k = 0; k <= 300; ++k) {
    const double x = 1.5 * k / 300.0;
    CHECK(lower_boundary(x) <= upper_boundary(x) + 1e-15);
    if (k > 0) CHECK(upper_boundary(x) >= upper_boundary(1.5 * (k - 1) / 300.0));
    const double y = upper_boundary(x);
    CHECK(std::abs(upper_boundary_inverse(y) - x) < 1e-9);
  }
  CHECK_THROWS_AS(lower_boundary(1.6), Error);
  CHECK_THROWS_AS(upper_boundary(-0.1), Error);
}

TEST_CASE("in_pure_region") {
  CHECK(in_pure_region({0.0, 0.0}, 0.0));
  CHECK_FALSE(in_pure_region({1.5, 0.4}, 1e-8));
  CHECK_FALSE(in_pure_region({0.1, 1.0}, 1e-8));
  CHECK(in_pure_region({1.0, 0.5}, 0.0));
  Rng rng(51);
  for (int t = 0; t < 10000; ++t) {
    const MeasurePoint p = measure_point(schmidt_decompose(haar_random_pure(4, 4, rng)).coefficients);
    if (!in_pure_region(p, 1e-8)) FAIL_CHECK("sample " << t << " outside the region");
  }
}

TEST_CASE("boundaries agree with brute-force extremes of n_T") {
  constexpr int kBins = 30;
  std::vector<double> lo(kBins, 10.0);
  std::vector<double> hi(kBins, -10.0);
  Rng rng(52);
  // Random points on the edges and faces of the ordered simplex.
  const double vert[4][4] = {{1, 0, 0, 0}, {0.5, 0.5, 0, 0}, {1.0 / 3, 1.0 / 3, 1.0 / 3, 0}, {0.25, 0.25, 0.25, 0.25}};
  for (int t = 0; t < 100000; ++t) {
    double w[4] = {0, 0, 0, 0};
    const int a = t % 4;
    const int b = (a + 1 + (t / 4) % 3) % 4;
    w[a] = rng.uniform();
    w[b] = 1.0 - w[a];
    if (t % 2 == 1) {
      const double c = rng.uniform() * 0.2;
      for (double& x : w) x *= 1 - c;
      w[(b + 1) % 4] += c;
    }
    std::vector<double> mu(4, 0.0);
    for (int v = 0; v < 4; ++v)
      for (int i = 0; i < 4; ++i) mu[i] += w[v] * vert[v][i];
    const MeasurePoint p = measure_point(SchmidtVector(mu));
    const int bin = std::min(kBins - 1, static_cast<int>(p.n_hat_phi / 1.5 * kBins));
    lo[bin] = std::min(lo[bin], p.n_t);
    hi[bin] = std::max(hi[bin], p.n_t);
  }
  for (int b = 0; b < kBins; ++b) {
    const double left = 1.5 * b / kBins;
    const double right = 1.5 * (b + 1) / kBins;
    CHECK(lo[b] >= lower_boundary(left) - 1e-12);
    CHECK(lo[b] <= lower_boundary(right) + 5e-3);
    CHECK(hi[b] <= upper_boundary(right) + 1e-12);
    CHECK(hi[b] >= upper_boundary(left) - 5e-3);
  }
}

TEST_CASE("solve_constraints: anchors") {
  bool found = false;
  for (const auto& s : solve_constraints(0.0, 0.0, 0.0)) {
    if (s.valid && dist(s.mu, {1, 0, 0, 0}) < 1e-9) found = true;
  }
  CHECK(found);

  found = false;
  for (const auto& s : solve_constraints(1.5, 1.5, 0.25)) {
    if (s.valid && dist(s.mu, {0.25, 0.25, 0.25, 0.25}) < 1e-6) found = true;
  }
  CHECK(found);

  // Outside the region nothing is valid, and each failure names a reason.
  for (const auto& s : solve_constraints(0.1, 1.4, 0.05)) {
    CHECK_FALSE(s.valid);
    CHECK(s.status != BranchStatus::Valid);
    CHECK_FALSE(to_string(s.status).empty());
  }
}

TEST_CASE("solve_constraints agrees with the reduction oracle") {
  Rng rng(53);
  int compared = 0;
  for (int t = 0; t < 2000; ++t) {
    // Points from random states; mu4 is the state's own half of the time.
    const SchmidtVector src = schmidt_decompose(haar_random_pure(4, 4, rng)).coefficients;
    const MeasurePoint p = measure_point(src);
    const double mu4 = t % 2 == 0 ? src[3] : 0.25 * rng.uniform();
    std::vector<std::array<double, 4>> got;
    for (const auto& s : solve_constraints(p.n_t, p.n_hat_phi, mu4)) {
      if (!s.valid) continue;
      got.push_back(s.mu);
      CHECK(s.residuals[0] <= kResidualTol);
      CHECK(s.residuals[1] <= kResidualTol);
      CHECK(s.residuals[2] <= kResidualTol);
      // Substituting back reproduces the constraints.
      const SchmidtVector sv = s.schmidt();
      CHECK(std::abs(pure_negativity(sv) - p.n_t) < 1e-8);
      CHECK(std::abs(nhat_phi(sv) - p.n_hat_phi) < 1e-8);
    }
    const auto want = oracle::constraint_solutions(p.n_t, p.n_hat_phi, mu4);
    // Every oracle solution clear of the validity edges must be found.
    for (const auto& w : want) {
      if (w[2] - w[3] < 1e-6 || w[1] - w[2] < 1e-6 || w[0] - w[1] < 1e-6) continue;
      ++compared;
      double best = 1.0;
      for (const auto& g : got) best = std::min(best, dist(g, w));
      CHECK(best < 1e-7);
    }
    for (const auto& g : got) {
      double best = 1.0;
      for (const auto& w : want) best = std::min(best, dist(g, w));
      CHECK(best < 1e-7);
    }
  }
  CHECK(compared > 50);
}

TEST_CASE("solve_constraints recovers Haar samples") {
  Rng rng(54);
  for (int t = 0; t < 10000; ++t) {
    const SchmidtVector mu = schmidt_decompose(haar_random_pure(4, 4, rng)).coefficients;
    const MeasurePoint p = measure_point(mu);
    double best = 1.0;
    for (const auto& s : solve_constraints(p.n_t, p.n_hat_phi, mu[3])) {
      if (!s.valid) continue;
      best = std::min(best, dist(s.mu, {mu[0], mu[1], mu[2], mu[3]}));
      if (s.residuals[0] > kResidualTol || s.residuals[1] > kResidualTol) FAIL_CHECK("residual at sample " << t);
    }
    if (best > 1e-6) FAIL_CHECK("sample " << t << " not recovered, gap " << best);
  }
}

TEST_CASE("feasible_mu4_scan") {
  CHECK(feasible_mu4_scan({1.5, 0.4}, 101).empty());
  CHECK(feasible_mu4_scan({0.2, 1.2}, 101).empty());

  const double x = 1.2;
  const auto on_lower = feasible_mu4_scan({x, lower_boundary(x)}, 101);
  REQUIRE_FALSE(on_lower.empty());
  bool has_zero = false;
  for (const auto& [mu4, s] : on_lower) {
    if (mu4 == 0.0 && std::abs(s.mu[2]) < 1e-9) has_zero = true;
  }
  CHECK(has_zero);

  const auto corner = feasible_mu4_scan({1.5, 1.5}, 101);
  REQUIRE_FALSE(corner.empty());
  for (const auto& [mu4, s] : corner) CHECK(mu4 > 0.24);

  for (const auto& [mu4, s] : feasible_mu4_scan({0.9, 0.5}, 41)) {
    CHECK(s.valid);
    CHECK(s.mu[3] == doctest::Approx(mu4));
  }
}

TEST_CASE("feasible_mu4_interval brackets the scan") {
  Rng rng(55);
  for (int t = 0; t < 200; ++t) {
    const double x = 1.5 * rng.uniform();
    const double y = lower_boundary(x) + rng.uniform() * (upper_boundary(x) - lower_boundary(x));
    const MeasurePoint p{x, y};
    const auto scan = feasible_mu4_scan(p, 401);
    for (int branch : {1, 2}) {
      const auto iv = feasible_mu4_interval(p, branch);
      for (const auto& [mu4, s] : scan) {
        if (s.branch != branch) continue;
        REQUIRE(iv.has_value());
        CHECK(mu4 >= iv->first - 1e-9);
        CHECK(mu4 <= iv->second + 1e-9);
      }
    }
  }
}

TEST_CASE("boundary_table") {
  const auto rows = boundary_table(3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].n_t_lower == 0.0);
  CHECK(rows[0].n_t_upper == doctest::Approx(0.0));
  CHECK(rows[2].n_hat_phi == 1.5);
  CHECK(rows[2].n_t_lower == doctest::Approx(0.5));
  CHECK(rows[2].n_t_upper == doctest::Approx(1.5));
  const auto fine = boundary_table(151);
  for (std::size_t k = 1; k < fine.size(); ++k) CHECK(fine[k].n_t_upper >= fine[k - 1].n_t_upper);
  CHECK_THROWS_AS(boundary_table(1), Error);
}
