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

#ifndef ENTBOUND_SINGLE_BOUNDS_HPP
#define ENTBOUND_SINGLE_BOUNDS_HPP

#include <optional>
#include <string_view>

#include "entbound/measures.hpp"

namespace entbound {

// EOF is a <cstdio> macro, hence the mixed-case tags.
enum class Measure { Eof, Tangle, Concurrence };
enum class Constraint { NT, NPHI };

std::string_view to_string(Measure m);
std::string_view to_string(Constraint c);
/// Accepts eof|tangle|concurrence (any case).
std::optional<Measure> parse_measure(std::string_view s);
/// Accepts nt|nphi (any case).
std::optional<Constraint> parse_constraint(std::string_view s);

/// Upper end of both constraint axes.
inline constexpr double kConstraintMax = 1.5;

/// Binary entropy in bits, H2(0) = H2(1) = 0.
double binary_entropy(double p);

// Every bound takes its argument in [0, 3/2] and throws DomainError otherwise.
double eof_bound_phi(double n_phi);
double gamma_of_nt(double n_t);
double eof_bound_nt(double n_t);
double tangle_bound_phi(double n_phi);
double tangle_tilde_nt(double n_t);
double tangle_bound_nt(double n_t);
double conc_bound_phi(double n_phi);
double conc_bound_nt(double n_t);

double single_bound(Measure m, Constraint c, double value);
/// Pure-state value of the measure.
double measure_pure(Measure m, const SchmidtVector& mu);

/// NPHI when the Phi-based bound beats the n_T bound by more than 1e-12.
Constraint better_constraint(Measure m, const MeasurePoint& p);

/// The n_T at which both single bounds agree for this n_hat_phi, found by
/// bisection; points below it are where the Phi bound wins. Returns 3/2 when
/// the n_T bound never catches up.
double region_split(Measure m, double n_hat_phi);

}  // namespace entbound

#endif  // ENTBOUND_SINGLE_BOUNDS_HPP
