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

#include "entbound/single_bounds.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "entbound/error.hpp"

namespace entbound {

namespace {

constexpr double kSqrtClamp = 1e-12;

// Measure values computed in floating point may overshoot the square by an
// ulp or two; those are clamped instead of rejected.
constexpr double kDomainSlack = 1e-9;

double check_domain(double v, const char* what) {
  if (!(v >= -kDomainSlack && v <= kConstraintMax + kDomainSlack)) {
    throw Error(ErrorCode::DomainError,
                std::string(what) + " argument " + std::to_string(v) + " outside [0, 3/2]");
  }
  return std::clamp(v, 0.0, kConstraintMax);
}

// Rounding near the domain edges can leave a radicand at -1e-16.
double safe_sqrt(double x) {
  if (x < 0.0 && x >= -kSqrtClamp) return 0.0;
  return std::sqrt(x);
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::Eof: return "eof";
    case Measure::Tangle: return "tangle";
    case Measure::Concurrence: return "concurrence";
  }
  return "unknown";
}

std::string_view to_string(Constraint c) { return c == Constraint::NT ? "NT" : "NPHI"; }

std::optional<Measure> parse_measure(std::string_view s) {
  const std::string v = lower(s);
  if (v == "eof") return Measure::Eof;
  if (v == "tangle") return Measure::Tangle;
  if (v == "concurrence") return Measure::Concurrence;
  return std::nullopt;
}

std::optional<Constraint> parse_constraint(std::string_view s) {
  const std::string v = lower(s);
  if (v == "nt") return Constraint::NT;
  if (v == "nphi") return Constraint::NPHI;
  return std::nullopt;
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double eof_bound_phi(double n_phi) {
  n_phi = check_domain(n_phi, "eof_bound_phi");
  const double s = safe_sqrt(1.0 - 4.0 * n_phi * n_phi / 9.0);
  return binary_entropy((1.0 + s) / 2.0);
}

double gamma_of_nt(double n_t) {
  n_t = check_domain(n_t, "gamma_of_nt");
  const double r = std::sqrt(2.0 * n_t + 1.0) + safe_sqrt(3.0 * (3.0 - 2.0 * n_t));
  return r * r / 16.0;
}

double eof_bound_nt(double n_t) {
  n_t = check_domain(n_t, "eof_bound_nt");
  if (n_t <= 1.0) {
    const double g = gamma_of_nt(n_t);
    return binary_entropy(g) + (1.0 - g) * std::log2(3.0);
  }
  return (n_t - 1.5) * std::log2(3.0) + 2.0;
}

double tangle_bound_phi(double n_phi) {
  n_phi = check_domain(n_phi, "tangle_bound_phi");
  return 4.0 / 9.0 * n_phi * n_phi;
}

double tangle_tilde_nt(double n_t) {
  n_t = check_domain(n_t, "tangle_tilde_nt");
  const double root = safe_sqrt(3.0 * (3.0 + 4.0 * n_t - 4.0 * n_t * n_t));
  return std::max(0.0, (9.0 + 4.0 * n_t * n_t + root * (2.0 * n_t - 3.0)) / 12.0);
}

double tangle_bound_nt(double n_t) {
  n_t = check_domain(n_t, "tangle_bound_nt");
  if (n_t <= 1.0) return tangle_tilde_nt(n_t);
  return 4.0 / 3.0 * n_t - 0.5;
}

double conc_bound_phi(double n_phi) {
  n_phi = check_domain(n_phi, "conc_bound_phi");
  return 2.0 / 3.0 * n_phi;
}

double conc_bound_nt(double n_t) {
  n_t = check_domain(n_t, "conc_bound_nt");
  return std::sqrt(2.0 / 3.0) * n_t;
}

double single_bound(Measure m, Constraint c, double value) {
  switch (m) {
    case Measure::Eof: return c == Constraint::NT ? eof_bound_nt(value) : eof_bound_phi(value);
    case Measure::Tangle:
      return c == Constraint::NT ? tangle_bound_nt(value) : tangle_bound_phi(value);
    case Measure::Concurrence:
      return c == Constraint::NT ? conc_bound_nt(value) : conc_bound_phi(value);
  }
  throw Error(ErrorCode::DomainError, "unknown measure");
}

double measure_pure(Measure m, const SchmidtVector& mu) {
  switch (m) {
    case Measure::Eof: return eof_pure(mu);
    case Measure::Tangle: return tangle_pure(mu);
    case Measure::Concurrence: return concurrence_pure(mu);
  }
  throw Error(ErrorCode::DomainError, "unknown measure");
}

Constraint better_constraint(Measure m, const MeasurePoint& p) {
  const double by_phi = single_bound(m, Constraint::NPHI, p.n_hat_phi);
  const double by_nt = single_bound(m, Constraint::NT, p.n_t);
  return by_phi > by_nt + 1e-12 ? Constraint::NPHI : Constraint::NT;
}

double region_split(Measure m, double n_hat_phi) {
  const double target = single_bound(m, Constraint::NPHI, n_hat_phi);
  // The n_T bound is increasing, so the tie is a single crossing.
  double lo = 0.0;
  double hi = kConstraintMax;
  if (single_bound(m, Constraint::NT, hi) <= target) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (single_bound(m, Constraint::NT, mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace entbound
