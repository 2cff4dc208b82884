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

#ifndef ENTBOUND_REGION_HPP
#define ENTBOUND_REGION_HPP

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "entbound/measures.hpp"

namespace entbound {

/// Lower edge of the pure-state region: n_T = n_phi / 3.
double lower_boundary(double n_phi);
/// Upper edge, reached by mu = (g, g', g', g').
double upper_boundary(double n_phi);
/// Inverse of the (increasing) upper edge: the n_phi where it reaches n_t.
double upper_boundary_inverse(double n_t);

struct RegionBoundary {
  double lower(double n_phi) const { return lower_boundary(n_phi); }
  double upper(double n_phi) const { return upper_boundary(n_phi); }
};

bool in_pure_region(const MeasurePoint& p, double tol);

enum class BranchStatus {
  Valid,
  ComplexValue,       // negative radicand beyond the clamp
  RangeViolation,     // some mu outside [0, 1]
  OrderingViolation,  // not mu1 >= mu2 >= mu3 >= mu4
  ResidualFailure,    // closed form did not reproduce the constraints
};

std::string_view to_string(BranchStatus s);

struct BranchSolution {
  std::array<double, 4> mu{};
  int branch = 0;  // 1 or 2
  bool valid = false;
  BranchStatus status = BranchStatus::ComplexValue;
  /// |n_T(mu) - n_t|, |n_hat_phi(mu) - n_phi|, |sum(mu) - 1|
  std::array<double, 3> residuals{};

  SchmidtVector schmidt() const;
};

inline constexpr double kResidualTol = 1e-8;

/// One closed-form branch (1 or 2) at fixed mu4; arguments are not range
/// checked, use solve_constraints for that.
BranchSolution solve_branch(double n_t, double n_phi, double mu4, int branch);

/// Both closed-form branches at fixed mu4, valid or not. mu2 >= mu3 is
/// enforced by construction (the constraints are symmetric in the two).
std::vector<BranchSolution> solve_constraints(double n_t, double n_phi, double mu4);

/// Valid branches over mu4 = 0, 1/4 (steps-1)^-1, ..., 1/4.
std::vector<std::pair<double, BranchSolution>> feasible_mu4_scan(const MeasurePoint& p,
                                                                 int steps);

/// The set of mu4 where `branch` is valid is an interval; this finds its ends
/// by bisection on the (monotone) defining constraints. nullopt if empty.
std::optional<std::pair<double, double>> feasible_mu4_interval(const MeasurePoint& p,
                                                               int branch);

struct BoundaryRow {
  double n_hat_phi;
  double n_t_lower;
  double n_t_upper;
};

/// `resolution` evenly spaced rows over [0, 3/2].
std::vector<BoundaryRow> boundary_table(int resolution);

}  // namespace entbound

#endif  // ENTBOUND_REGION_HPP
