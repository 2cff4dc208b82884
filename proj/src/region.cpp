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

#include "entbound/region.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entbound/error.hpp"
#include "entbound/single_bounds.hpp"

namespace entbound {

namespace {

constexpr double kRadicandClamp = 1e-10;
constexpr double kOrderSlack = 1e-9;
constexpr double kSqrt2 = 1.41421356237309504880;

double check_axis(double v, const char* what) {
  if (!(v >= -1e-9 && v <= kConstraintMax + 1e-9)) {
    throw Error(ErrorCode::DomainError,
                std::string(what) + " argument " + std::to_string(v) + " outside [0, 3/2]");
  }
  return std::clamp(v, 0.0, kConstraintMax);
}

double clamped_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }

// sqrt(1 - 4 n^2 / 9), shared by both branches.
double branch_s(double n_phi) { return clamped_sqrt(1.0 - 4.0 * n_phi * n_phi / 9.0); }

using ld = long double;

ld g0(ld nt, ld m4) {
  return 1 + 8 * (nt + m4) * std::sqrt(m4 * (2 * nt + 1)) - 4 * nt * (nt + 4 * m4) -
         3 * m4 * (m4 + 2);
}

// The closed form for G1 with r = sqrt(2 n_T + 1), q = sqrt(mu4).
ld g1(ld m1, ld nt, ld m4) {
  const ld r = std::sqrt(2 * nt + 1);
  const ld q = std::sqrt(m4);
  const ld sm1 = std::sqrt(m1);
  return 3 * m1 * m1 - 8 * m1 * sm1 * (r - q) + 2 * m1 * (3 + 8 * nt - 8 * q * r + 5 * m4) +
         8 * sm1 * (q * (1 - 2 * q * r + m4) - nt * (r - 3 * q));
}

}  // namespace

BranchSolution solve_branch(double n_t, double n_phi, double mu4, int branch) {
  BranchSolution sol;
  sol.branch = branch;
  const double sign = branch == 1 ? 1.0 : -1.0;
  const double s = branch_s(n_phi);
  double m1 = (1.0 + sign * s - 2.0 * mu4) / 2.0;
  const double beta = (1.0 - sign * s) / 2.0;
  if (m1 < -kRadicandClamp) {
    sol.status = BranchStatus::RangeViolation;
    sol.mu = {m1, 0.0, 0.0, mu4};
    return sol;
  }
  m1 = std::max(m1, 0.0);

  const ld disc = g0(n_t, mu4) - g1(m1, n_t, mu4);
  if (disc < -static_cast<ld>(kRadicandClamp)) {
    sol.status = BranchStatus::ComplexValue;
    sol.mu = {m1, 0.0, 0.0, mu4};
    return sol;
  }
  const double d = static_cast<double>(std::sqrt(std::max(disc, ld{0})));
  const double m2 = (beta + d) / 2.0;
  // mu3 from the product mu2 mu3 = ((w^2 - beta)/2)^2 instead of beta - mu2,
  // which loses everything when mu3 is tiny.
  const double w = std::sqrt(2.0 * n_t + 1.0) - std::sqrt(m1) - std::sqrt(mu4);
  const double half = (w * w - beta) / 2.0;
  const double m3 = m2 > 0.0 ? half * half / m2 : 0.0;
  sol.mu = {m1, m2, m3, mu4};

  for (double m : sol.mu) {
    if (m < -kOrderSlack || m > 1.0 + kOrderSlack) {
      sol.status = BranchStatus::RangeViolation;
      return sol;
    }
  }
  for (auto& m : sol.mu) m = std::clamp(m, 0.0, 1.0);
  if (sol.mu[1] < sol.mu[2]) std::swap(sol.mu[1], sol.mu[2]);
  if (sol.mu[0] < sol.mu[1] - kOrderSlack || sol.mu[1] < sol.mu[2] - kOrderSlack ||
      sol.mu[2] < sol.mu[3] - kOrderSlack) {
    sol.status = BranchStatus::OrderingViolation;
    return sol;
  }

  double root_sum = 0.0;
  double total = 0.0;
  for (double m : sol.mu) {
    root_sum += std::sqrt(m);
    total += m;
  }
  sol.residuals[0] = std::abs((root_sum * root_sum - 1.0) / 2.0 - n_t);
  sol.residuals[1] =
      std::abs(3.0 * std::sqrt((sol.mu[0] + sol.mu[3]) * (sol.mu[1] + sol.mu[2])) - n_phi);
  sol.residuals[2] = std::abs(total - 1.0);
  if (sol.residuals[0] > kResidualTol || sol.residuals[1] > kResidualTol ||
      sol.residuals[2] > kResidualTol) {
    sol.status = BranchStatus::ResidualFailure;
    return sol;
  }
  sol.valid = true;
  sol.status = BranchStatus::Valid;
  return sol;
}

namespace {

// Shrinks [a, b] around the switch of pred, given pred(a) and !pred(b).
template <typename Pred>
std::pair<double, double> bisect(Pred pred, double a, double b) {
  for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
    const double m = 0.5 * (a + b);
    (pred(m) ? a : b) = m;
  }
  return {a, b};
}

}  // namespace

double lower_boundary(double n_phi) { return check_axis(n_phi, "lower_boundary") / 3.0; }

double upper_boundary(double n_phi) {
  n_phi = check_axis(n_phi, "upper_boundary");
  const double s = branch_s(n_phi);
  return 0.75 * (1.0 - s + clamped_sqrt(4.0 / 3.0 * n_phi * n_phi + 2.0 * s - 2.0));
}

double upper_boundary_inverse(double n_t) {
  n_t = check_axis(n_t, "upper_boundary_inverse");
  double a = 0.0;
  double b = kConstraintMax;
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    const double m = 0.5 * (a + b);
    (upper_boundary(m) < n_t ? a : b) = m;
  }
  return b;
}

bool in_pure_region(const MeasurePoint& p, double tol) {
  if (p.n_hat_phi < -tol || p.n_hat_phi > kConstraintMax + tol) return false;
  const double x = std::clamp(p.n_hat_phi, 0.0, kConstraintMax);
  return p.n_t >= lower_boundary(x) - tol && p.n_t <= upper_boundary(x) + tol;
}

std::string_view to_string(BranchStatus s) {
  switch (s) {
    case BranchStatus::Valid: return "valid";
    case BranchStatus::ComplexValue: return "complex-value";
    case BranchStatus::RangeViolation: return "range-violation";
    case BranchStatus::OrderingViolation: return "ordering-violation";
    case BranchStatus::ResidualFailure: return "residual-failure";
  }
  return "unknown";
}

SchmidtVector BranchSolution::schmidt() const {
  std::vector<double> v(mu.begin(), mu.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  double total = 0.0;
  for (double m : v) total += m;
  for (auto& m : v) m /= total;
  return SchmidtVector(std::move(v));
}

std::vector<BranchSolution> solve_constraints(double n_t, double n_phi, double mu4) {
  n_t = check_axis(n_t, "solve_constraints n_t");
  n_phi = check_axis(n_phi, "solve_constraints n_phi");
  if (!(mu4 >= 0.0 && mu4 <= 0.25 + 1e-12)) {
    throw Error(ErrorCode::DomainError, "mu4 " + std::to_string(mu4) + " outside [0, 1/4]");
  }
  return {solve_branch(n_t, n_phi, mu4, 1), solve_branch(n_t, n_phi, mu4, 2)};
}

std::vector<std::pair<double, BranchSolution>> feasible_mu4_scan(const MeasurePoint& p,
                                                                 int steps) {
  if (steps < 2) throw Error(ErrorCode::DomainError, "mu4 scan needs at least 2 steps");
  std::vector<std::pair<double, BranchSolution>> out;
  if (!in_pure_region(p, 1e-9)) return out;
  for (int k = 0; k < steps; ++k) {
    const double mu4 = 0.25 * static_cast<double>(k) / static_cast<double>(steps - 1);
    for (auto& sol : solve_constraints(p.n_t, p.n_hat_phi, mu4))
      if (sol.valid) out.emplace_back(mu4, sol);
  }
  return out;
}

// With alpha = mu1 + mu4 and beta = mu2 + mu3 fixed by the branch, the n_T
// constraint pins w = sqrt(mu2) + sqrt(mu3) = r - sqrt(alpha - mu4) - sqrt(mu4),
// which falls as mu4 grows. Every validity condition is monotone in mu4:
//   w <= sqrt(2 beta)          holds from some mu4 on,
//   w >= sqrt(beta)            holds up to some mu4,
//   mu3 >= mu4, mu1 >= mu2     hold up to some mu4,
// so the valid set is [lo, hi].
std::optional<std::pair<double, double>> feasible_mu4_interval(const MeasurePoint& p,
                                                               int branch) {
  if (branch != 1 && branch != 2) throw Error(ErrorCode::DomainError, "branch must be 1 or 2");
  if (!in_pure_region(p, 1e-9)) return std::nullopt;
  const double n_phi = std::clamp(p.n_hat_phi, 0.0, kConstraintMax);
  const double n_t = std::clamp(p.n_t, 0.0, kConstraintMax);
  if (branch == 2 && n_phi < kSqrt2 - 1e-12) return std::nullopt;  // mu1 >= mu2 impossible

  const double sign = branch == 1 ? 1.0 : -1.0;
  const double s = branch_s(n_phi);
  const double alpha = (1.0 + sign * s) / 2.0;
  const double beta = 1.0 - alpha;
  const double r = std::sqrt(2.0 * n_t + 1.0);
  const double top = std::min(alpha / 2.0, 0.25);
  constexpr double tol = 1e-13;

  auto w = [&](double m4) { return r - clamped_sqrt(alpha - m4) - std::sqrt(m4); };
  auto v = [&](double m4) {
    const double ww = w(m4);
    const double x = ww * ww - beta;
    return 0.5 * clamped_sqrt(beta * beta - x * x);
  };
  const double w_max = std::sqrt(2.0 * beta);
  if (w(top) > w_max + tol) return std::nullopt;
  const double lo =
      w(0.0) <= w_max + tol ? 0.0 : bisect([&](double m) { return w(m) > w_max; }, 0.0, top).second;
  auto ok = [&](double m4) {
    const double vv = v(m4);
    return w(m4) >= std::sqrt(beta) - tol && beta / 2.0 - vv - m4 >= -tol &&
           alpha - m4 - beta / 2.0 - vv >= -tol;
  };
  if (!ok(lo)) return std::nullopt;
  const double hi = ok(top) ? top : bisect(ok, lo, top).first;
  return std::make_pair(lo, std::max(lo, hi));
}

std::vector<BoundaryRow> boundary_table(int resolution) {
  if (resolution < 2) throw Error(ErrorCode::DomainError, "resolution must be >= 2");
  std::vector<BoundaryRow> rows;
  rows.reserve(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    const double x = kConstraintMax * static_cast<double>(i) / static_cast<double>(resolution - 1);
    rows.push_back({x, lower_boundary(x), upper_boundary(x)});
  }
  return rows;
}

}  // namespace entbound
