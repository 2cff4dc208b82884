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

#include "entbound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "entbound/error.hpp"
#include "entbound/measures.hpp"

namespace entbound {

namespace {

void require_even(std::size_t d) {
  if (d < 4 || d % 2 != 0) {
    throw Error(ErrorCode::OddDimension, "need even D >= 4, got " + std::to_string(d));
  }
}

bool admissible(std::size_t d, std::size_t j, std::size_t k) {  // 1-based
  return j != k && k != d - j + 1;
}

double horner(const std::vector<double>& c, double z) {
  double v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * z + c[k];
  return v;
}

std::vector<double> derivative(const std::vector<double>& c) {
  std::vector<double> out;
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(static_cast<double>(k) * c[k]);
  return out;
}

// Real roots (with multiplicity) of a real-rooted polynomial.
std::vector<double> real_roots(const std::vector<double>& c) {
  const std::size_t deg = c.size() - 1;
  if (deg == 0) return {};
  if (deg == 1) return {-c[0] / c[1]};

  double bound = 0.0;
  for (std::size_t k = 0; k < deg; ++k) bound = std::max(bound, std::abs(c[k] / c[deg]));
  bound += 1.0;
  double scale = 0.0;
  for (double x : c) scale = std::max(scale, std::abs(x));
  const double tol = 1e-15 * scale;

  // Distinct critical points with their multiplicity as roots of p'.
  const auto crit = real_roots(derivative(c));
  std::vector<std::pair<double, int>> points;
  for (double r : crit) {
    if (!points.empty() && std::abs(r - points.back().first) <= 1e-12) {
      ++points.back().second;
    } else {
      points.push_back({r, 1});
    }
  }

  std::vector<double> roots;
  std::vector<double> knots{-bound};
  for (const auto& [x, mult] : points) {
    if (std::abs(horner(c, x)) <= tol) {
      for (int m = 0; m <= mult; ++m) roots.push_back(x);
    }
    knots.push_back(x);
  }
  knots.push_back(bound);

  auto value = [&](double x) {
    const double v = horner(c, x);
    return std::abs(v) <= tol ? 0.0 : v;
  };
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    double a = knots[k];
    double b = knots[k + 1];
    double fa = value(a);
    const double fb = value(b);
    if (fa == 0.0 || fb == 0.0 || (fa < 0.0) == (fb < 0.0)) continue;
    for (int it = 0; it < 200 && b - a > 1e-17; ++it) {
      const double m = 0.5 * (a + b);
      const double fm = horner(c, m);
      if ((fm < 0.0) == (fa < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    roots.push_back(0.5 * (a + b));
  }
  std::sort(roots.begin(), roots.end());
  if (roots.size() != deg) {
    throw Error(ErrorCode::ConvergenceFailure, "found " + std::to_string(roots.size()) +
                                                   " of " + std::to_string(deg) + " roots");
  }
  return roots;
}

}  // namespace

std::vector<double> SpectrumSummary::all() const {
  std::vector<double> out(zero_count, 0.0);
  out.insert(out.end(), pair_eigenvalues.begin(), pair_eigenvalues.end());
  out.insert(out.end(), r_roots.begin(), r_roots.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<AdmissiblePair> admissible_pairs(std::size_t d) {
  require_even(d);
  std::vector<AdmissiblePair> out;
  for (std::size_t p = 1; p <= d; ++p)
    for (std::size_t q = p + 1; q <= d; ++q)
      if (admissible(d, p, q)) out.push_back({static_cast<int>(p), static_cast<int>(q)});
  return out;
}

double admissible_sum(std::size_t n, const SchmidtVector& mu) {
  const std::size_t d = mu.size();
  if (n < 1 || 2 * n > d) {
    throw Error(ErrorCode::DomainError,
                "admissible_sum order " + std::to_string(n) + " for D = " + std::to_string(d));
  }
  // Depth-first over increasing index sets; D is tiny.
  double total = 0.0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, double)> walk = [&](std::size_t next, double product) {
    if (chosen.size() == n) {
      total += product;
      return;
    }
    for (std::size_t j = next; j <= d; ++j) {
      bool ok = true;
      for (std::size_t i : chosen) ok = ok && admissible(d, i, j);
      if (!ok) continue;
      chosen.push_back(j);
      walk(j + 1, product * mu[j - 1]);
      chosen.pop_back();
    }
  };
  walk(1, 1.0);
  return total;
}

std::vector<double> r_poly_coeffs(std::size_t d, const SchmidtVector& mu) {
  require_even(d);
  if (mu.size() != d) {
    throw Error(ErrorCode::WrongLength, "need " + std::to_string(d) + " coefficients");
  }
  const std::size_t h = d / 2;
  std::vector<double> c(h + 1, 0.0);
  c[h] = 1.0;
  for (std::size_t t = 1; t + 2 <= h; ++t) {  // the t = 0 term vanishes
    const double sign = t % 2 == 0 ? 1.0 : -1.0;
    c[h - t - 1] += static_cast<double>(t) * sign * admissible_sum(t + 1, mu);
  }
  double prod = 1.0;
  for (std::size_t j = 0; j < h; ++j) prod *= mu[j] + mu[d - 1 - j];
  const double sign_h = h % 2 == 0 ? 1.0 : -1.0;
  c[0] -= static_cast<double>(h - 1) * sign_h * prod;
  return c;
}

std::vector<double> r_roots(std::size_t d, const SchmidtVector& mu) {
  return real_roots(r_poly_coeffs(d, mu));
}

SpectrumSummary predicted_spectrum(std::size_t d, const SchmidtVector& mu) {
  SpectrumSummary s;
  s.zero_count = d * (d + 1) / 2;
  for (const auto& pr : admissible_pairs(d)) s.pair_eigenvalues.push_back(mu[pr.p - 1] + mu[pr.q - 1]);
  s.r_roots = r_roots(d, mu);
  return s;
}

double verify_against_direct(const SchmidtVector& mu, std::size_t d) {
  const SpectrumSummary predicted = predicted_spectrum(d, mu);
  const DensityMatrix rho = to_density(make_schmidt_state(mu, d));
  const auto direct = hermitian_eigenvalues(apply_phi_B(rho, AngularMomentumBasis::identity(d)));
  const auto expect = predicted.all();
  if (direct.size() != expect.size()) {
    throw Error(ErrorCode::DimensionMismatch, "spectrum sizes differ");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < direct.size(); ++k)
    worst = std::max(worst, std::abs(direct[k] - expect[k]));
  return worst;
}

}  // namespace entbound
