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

// Reference implementations used only by the tests. None of them share code
// paths with the library beyond ComplexMatrix storage.

#ifndef ENTBOUND_TESTS_ORACLES_HPP
#define ENTBOUND_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "entbound/linalg.hpp"
#include "entbound/states.hpp"

namespace oracle {

using entbound::cplx;
using entbound::ComplexMatrix;

// Number of eigenvalues of Hermitian h strictly below lambda, from the
// inertia of LDL^H of (h - lambda I) (Sylvester). No pivoting; a zero pivot
// is nudged, which only matters on a measure-zero set of shifts.
inline int count_below(const ComplexMatrix& h, double lambda) {
  const std::size_t n = h.rows();
  std::vector<cplx> a(h.entries().begin(), h.entries().end());
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] -= lambda;
  int negatives = 0;
  for (std::size_t k = 0; k < n; ++k) {
    double d = a[k * n + k].real();
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++negatives;
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx l = a[i * n + k] / d;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= l * std::conj(a[j * n + k]);
    }
  }
  return negatives;
}

// All eigenvalues of a Hermitian matrix by bisection on count_below,
// descending.
inline std::vector<double> bisection_eigenvalues(const ComplexMatrix& h) {
  const std::size_t n = h.rows();
  double r = 1.0;
  for (const auto& z : h.entries()) r += std::abs(z);
  std::vector<double> out;
  for (std::size_t k = 0; k < n; ++k) {
    double lo = -r;
    double hi = r;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * r; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(h, mid) > static_cast<int>(k)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.push_back(0.5 * (lo + hi));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline ComplexMatrix random_hermitian(std::size_t n, entbound::Rng& rng) {
  ComplexMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = cplx{rng.normal(), rng.normal()};
  return b + b.adjoint();
}

inline ComplexMatrix random_matrix(std::size_t r, std::size_t c, entbound::Rng& rng) {
  ComplexMatrix b(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) b(i, j) = cplx{rng.normal(), rng.normal()};
  return b;
}

// Sorted Dirichlet(1) vector, descending, renormalized exactly.
inline entbound::ComplexVector random_unit_vector(std::size_t n, entbound::Rng& rng) {
  entbound::ComplexVector v(n);
  double norm = 0.0;
  for (auto& z : v) {
    z = cplx{rng.normal(), rng.normal()};
    norm += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(norm);
  return v;
}

inline std::vector<double> random_mu(std::size_t d, entbound::Rng& rng) {
  std::vector<double> mu(d);
  double total = 0.0;
  for (auto& m : mu) {
    m = -std::log(1.0 - rng.uniform());
    total += m;
  }
  for (auto& m : mu) m /= total;
  std::sort(mu.begin(), mu.end(), std::greater<>());
  double s = 0.0;
  for (std::size_t i = 1; i < d; ++i) s += mu[i];
  mu[0] = 1.0 - s;
  return mu;
}

// Squared singular values of the dA x dB amplitude matrix, descending.
inline std::vector<double> schmidt_by_svd(const entbound::PureState& psi) {
  ComplexMatrix m(psi.dim_a, psi.dim_b, psi.amplitudes);
  return bisection_eigenvalues(m * m.adjoint());
}

// Lower convex envelope of scattered values at one query point, by brute
// force over every point, segment and triangle (Caratheodory in 2D).
struct Sample {
  double x, y, v;
};

inline double envelope_at(const std::vector<Sample>& pts, double qx, double qy) {
  constexpr double kEps = 1e-12;
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (std::abs(pts[a].x - qx) < kEps && std::abs(pts[a].y - qy) < kEps) best = std::min(best, pts[a].v);
    for (std::size_t b = a + 1; b < n; ++b) {
      // Segment a-b.
      const double ex = pts[b].x - pts[a].x;
      const double ey = pts[b].y - pts[a].y;
      const double len2 = ex * ex + ey * ey;
      const double t = ((qx - pts[a].x) * ex + (qy - pts[a].y) * ey) / len2;
      const double px = pts[a].x + t * ex - qx;
      const double py = pts[a].y + t * ey - qy;
      if (t >= -kEps && t <= 1 + kEps && px * px + py * py < kEps * kEps)
        best = std::min(best, pts[a].v + t * (pts[b].v - pts[a].v));
      for (std::size_t c = b + 1; c < n; ++c) {
        const double det = (pts[b].x - pts[a].x) * (pts[c].y - pts[a].y) -
                           (pts[c].x - pts[a].x) * (pts[b].y - pts[a].y);
        if (std::abs(det) < 1e-14) continue;
        const double l1 = ((pts[b].y - pts[c].y) * (qx - pts[c].x) + (pts[c].x - pts[b].x) * (qy - pts[c].y)) / det;
        const double l2 = ((pts[c].y - pts[a].y) * (qx - pts[c].x) + (pts[a].x - pts[c].x) * (qy - pts[c].y)) / det;
        const double l3 = 1.0 - l1 - l2;
        if (l1 < -kEps || l2 < -kEps || l3 < -kEps) continue;
        best = std::min(best, l1 * pts[a].v + l2 * pts[b].v + l3 * pts[c].v);
      }
    }
  }
  return best;
}

// Ordered solutions of the three constraints at fixed mu4 by direct
// reduction: s = mu2 + mu3 solves s(1 - s) = (n_phi/3)^2, then mu2 is
// bisected so that sqrt(mu2) + sqrt(s - mu2) matches what the n_T
// constraint leaves over.
inline std::vector<std::array<double, 4>> constraint_solutions(double n_t, double n_phi, double mu4) {
  std::vector<std::array<double, 4>> out;
  const double disc = 1.0 - 4.0 * n_phi * n_phi / 9.0;
  if (disc < 0.0) return out;
  const double total = std::sqrt(2.0 * n_t + 1.0) - std::sqrt(mu4);
  for (double s : {(1.0 - std::sqrt(disc)) / 2.0, (1.0 + std::sqrt(disc)) / 2.0}) {
    const double mu1 = 1.0 - mu4 - s;
    if (mu1 < 0.0 || s < 0.0) continue;
    const double target = total - std::sqrt(mu1);
    auto f = [&](double m2) { return std::sqrt(m2) + std::sqrt(std::max(s - m2, 0.0)); };
    // f falls from sqrt(2s) at s/2 to sqrt(s) at s.
    if (target > f(s / 2) + 1e-12 || target < f(s) - 1e-12) continue;
    double lo = s / 2;
    double hi = s;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) > target ? lo : hi) = mid;
    }
    const double mu2 = 0.5 * (lo + hi);
    const std::array<double, 4> mu{mu1, mu2, s - mu2, mu4};
    if (mu[0] + 1e-9 >= mu[1] && mu[1] + 1e-9 >= mu[2] && mu[2] + 1e-9 >= mu[3]) out.push_back(mu);
  }
  return out;
}

}  // namespace oracle

#endif  // ENTBOUND_TESTS_ORACLES_HPP
