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

#include "entbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <json.hpp>

#include "entbound/error.hpp"
#include "entbound/linalg.hpp"
#include "entbound/measures.hpp"
#include "entbound/region.hpp"
#include "entbound/single_bounds.hpp"
#include "entbound/spectral.hpp"
#include "entbound/states.hpp"
#include "entbound/surface.hpp"

namespace entbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Collects "worst value must stay below tolerance" checks.
class Suite {
 public:
  Suite(std::string name, VerifyReport& report) : name_(std::move(name)), report_(report) {}

  // Passes when value <= tol.
  void at_most(const std::string& check, double value, double tol, std::string detail = {}) {
    report_.checks.push_back({name_, check, value <= tol, value, tol, std::move(detail)});
  }
  // Passes when value >= -tol; the reported value is the minimum seen.
  void at_least(const std::string& check, double value, double tol, std::string detail = {}) {
    report_.checks.push_back({name_, check, value >= -tol, value, tol, std::move(detail)});
  }
  void flag(const std::string& check, bool ok, std::string detail = {}) {
    report_.checks.push_back({name_, check, ok, ok ? 1.0 : 0.0, 0.0, std::move(detail)});
  }

 private:
  std::string name_;
  VerifyReport& report_;
};

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = cplx{rng.normal(), rng.normal()};
  return b + b.adjoint();
}

SchmidtVector random_schmidt(std::size_t d, Rng& rng) {
  std::vector<double> mu(d);
  double total = 0.0;
  for (auto& m : mu) {
    m = rng.gamma(1.0);
    total += m;
  }
  for (auto& m : mu) m /= total;
  std::sort(mu.begin(), mu.end(), std::greater<>());
  double s = 0.0;
  for (double m : mu) s += m;
  mu[0] += 1.0 - s;
  return SchmidtVector(std::move(mu));
}

void suite_linalg(VerifyReport& report, std::size_t samples, Rng& rng) {
  Suite s("linalg", report);
  double recon = 0.0;
  double ortho = 0.0;
  double trace_gap = 0.0;
  double norm_vs_trace = kInf;
  double ptrace_kron = 0.0;
  double pt_herm = 0.0;
  double pt_trace = 0.0;
  const std::size_t n = std::max<std::size_t>(samples / 10, 10);
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexMatrix a = random_hermitian(8, rng);
    const HermitianSpectrum sp = hermitian_eig(a);
    const ComplexMatrix lam = ComplexMatrix::diagonal(sp.eigenvalues);
    const ComplexMatrix back = sp.eigenvectors * lam * sp.eigenvectors.adjoint();
    recon = std::max(recon, (a - back).frobenius_norm() / a.frobenius_norm());
    ortho = std::max(ortho, max_abs_diff(sp.eigenvectors.adjoint() * sp.eigenvectors,
                                         ComplexMatrix::identity(8)));
    double sum = 0.0;
    for (double ev : sp.eigenvalues) sum += ev;
    trace_gap = std::max(trace_gap, std::abs(sum - a.trace().real()));
    norm_vs_trace = std::min(norm_vs_trace, trace_norm(a) - std::abs(a.trace().real()));

    const ComplexMatrix x = random_hermitian(2, rng);
    const ComplexMatrix y = random_hermitian(3, rng);
    ptrace_kron = std::max(ptrace_kron, max_abs_diff(partial_trace(kron(x, y), 2, 3, Subsystem::A),
                                                     x * y.trace()));
    const ComplexMatrix h = random_hermitian(6, rng);
    const ComplexMatrix pt = partial_transpose(h, 2, 3, Subsystem::B);
    pt_herm = std::max(pt_herm, pt.hermitian_defect());
    pt_trace = std::max(pt_trace, std::abs(pt.trace() - h.trace()));
  }
  s.at_most("eig reconstruction (relative Frobenius)", recon, 1e-10);
  s.at_most("eigenvector orthonormality", ortho, 1e-10);
  s.at_most("eigenvalue sum equals trace", trace_gap, 1e-10);
  s.at_least("trace norm >= |trace|", norm_vs_trace, 1e-10);
  s.at_most("partial_trace(a (x) b) = a Tr b", ptrace_kron, 1e-12);
  s.at_most("partial transpose keeps hermiticity", pt_herm, 1e-12);
  s.at_most("partial transpose keeps trace", pt_trace, 1e-12);
}

void suite_measures(VerifyReport& report, std::size_t samples, Rng& rng) {
  Suite s("measures", report);
  const auto id4 = AngularMomentumBasis::identity(4);
  double gap_identity = kInf;
  double gap_aligned = kInf;
  double tnorm = 0.0;
  double neg_cross = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const PureState psi = haar_random_pure(4, 4, rng);
    const SchmidtDecomposition sd = schmidt_decompose(psi);
    const DensityMatrix rho = to_density(psi);
    const double nh = nhat_phi(sd.coefficients);
    gap_identity = std::min(gap_identity, nh - phi_negativity(rho, id4));
    if (k % 10 == 0) {
      const auto aligned = schmidt_aligned_basis(sd);
      const ComplexMatrix x = apply_phi_B(rho, aligned);
      const auto& mu = sd.coefficients;
      const double expect = 2.0 * (1.0 + std::sqrt((mu[0] + mu[3]) * (mu[1] + mu[2])));
      tnorm = std::max(tnorm, std::abs(trace_norm(x) - expect));
      gap_aligned = std::min(gap_aligned, nh - phi_negativity(rho, aligned));
      neg_cross = std::max(neg_cross, std::abs(negativity(rho) - pure_negativity(mu)));
    }
  }
  s.at_least("n_hat_phi - n_phi >= 0, identity basis", gap_identity, 1e-9);
  s.at_least("n_hat_phi - n_phi >= 0, Schmidt-aligned basis", gap_aligned, 1e-9);
  s.at_most("aligned trace norm = 2[1 + sqrt((mu1+mu4)(mu2+mu3))]", tnorm, 1e-9);
  s.at_most("negativity(rho) = pure_negativity(mu)", neg_cross, 1e-9);

  double convex_phi = kInf;
  double convex_nt = kInf;
  const std::size_t pairs = std::max<std::size_t>(samples / 100, 5);
  for (std::size_t k = 0; k < pairs; ++k) {
    const DensityMatrix r1 = to_density(haar_random_pure(4, 4, rng));
    const DensityMatrix r2 = to_density(haar_random_pure(4, 4, rng));
    const double p1 = phi_negativity(r1, id4);
    const double p2 = phi_negativity(r2, id4);
    const double t1 = negativity(r1);
    const double t2 = negativity(r2);
    for (int l = 1; l <= 9; ++l) {
      const double lam = 0.1 * l;
      const DensityMatrix mix{4, 4, r1.matrix * cplx{lam, 0.0} + r2.matrix * cplx{1.0 - lam, 0.0}};
      convex_phi = std::min(convex_phi, lam * p1 + (1 - lam) * p2 - phi_negativity(mix, id4));
      convex_nt = std::min(convex_nt, lam * t1 + (1 - lam) * t2 - negativity(mix));
    }
  }
  s.at_least("n_phi convex under mixing", convex_phi, 1e-9);
  s.at_least("n_T convex under mixing", convex_nt, 1e-9);

  double perm = 0.0;
  for (std::size_t k = 0; k < std::max<std::size_t>(samples / 10, 10); ++k) {
    const SchmidtVector mu = random_schmidt(4, rng);
    std::vector<double> v(mu.values().begin(), mu.values().end());
    std::reverse(v.begin(), v.end());
    std::sort(v.begin(), v.end(), std::greater<>());
    const SchmidtVector again(v);
    perm = std::max({perm, std::abs(nhat_phi(mu) - nhat_phi(again)),
                     std::abs(pure_negativity(mu) - pure_negativity(again)),
                     std::abs(eof_pure(mu) - eof_pure(again)),
                     std::abs(tangle_pure(mu) - tangle_pure(again))});
  }
  s.at_most("pure-state functions depend on sorted mu only", perm, 0.0);
}

void suite_bounds(VerifyReport& report, std::size_t samples, Rng& rng) {
  Suite s("bounds", report);
  s.at_most("eof_bound_nt continuous at n_T = 1",
            std::abs(eof_bound_nt(1.0) - ((1.0 - 1.5) * std::log2(3.0) + 2.0)), 1e-12);
  s.at_most("tangle_bound_nt continuous at n_T = 1",
            std::abs(tangle_tilde_nt(1.0) - (4.0 / 3.0 - 0.5)), 1e-12);

  using Fn = double (*)(double);
  const std::pair<const char*, Fn> curves[] = {
      {"eof_bound_nt", eof_bound_nt},       {"eof_bound_phi", eof_bound_phi},
      {"tangle_bound_nt", tangle_bound_nt}, {"tangle_bound_phi", tangle_bound_phi},
      {"conc_bound_nt", conc_bound_nt},     {"conc_bound_phi", conc_bound_phi}};
  constexpr int kGrid = 10000;
  for (const auto& [name, f] : curves) {
    double min_step = kInf;
    double min_second = kInf;
    std::vector<double> v(kGrid + 1);
    for (int k = 0; k <= kGrid; ++k) v[k] = f(kConstraintMax * k / kGrid);
    for (int k = 0; k < kGrid; ++k) min_step = std::min(min_step, v[k + 1] - v[k]);
    for (int k = 1; k < kGrid; ++k) min_second = std::min(min_second, v[k + 1] - 2 * v[k] + v[k - 1]);
    s.at_least(std::string(name) + " nondecreasing", min_step, 0.0);
    s.at_least(std::string(name) + " convex (second differences)", min_second, 1e-9);
  }

  double valid = kInf;
  for (std::size_t k = 0; k < samples; ++k) {
    const SchmidtVector mu = schmidt_decompose(haar_random_pure(4, 4, rng)).coefficients;
    const MeasurePoint p = measure_point(mu);
    for (Measure m : {Measure::Eof, Measure::Tangle, Measure::Concurrence}) {
      const double bound = std::max(single_bound(m, Constraint::NPHI, p.n_hat_phi),
                                    single_bound(m, Constraint::NT, p.n_t));
      valid = std::min(valid, measure_pure(m, mu) - bound);
    }
  }
  s.at_least("single bounds hold on Haar pure states", valid, 1e-9);

  double tight_nt = 0.0;
  double tight_phi = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double g = 0.25 + 0.75 * k / 100.0;
    const double gp = (1.0 - g) / 3.0;
    const SchmidtVector mt({g, gp, gp, gp});
    // Above n_T = 1 the bound is the linear hull segment, not the curve.
    if (pure_negativity(mt) <= 1.0)
      tight_nt = std::max(tight_nt, std::abs(eof_bound_nt(pure_negativity(mt)) - eof_pure(mt)));
    const double a = 0.5 + 0.5 * k / 100.0;
    const SchmidtVector mp({a, 1.0 - a, 0.0, 0.0});
    tight_phi = std::max(tight_phi, std::abs(eof_bound_phi(nhat_phi(mp)) - eof_pure(mp)));
  }
  s.at_most("eof_bound_nt tight on (g, g', g', g')", tight_nt, 1e-9);
  s.at_most("eof_bound_phi tight on (a, 1-a, 0, 0)", tight_phi, 1e-9);

  double conc_rel = 0.0;
  for (int k = 0; k <= 1000; ++k) {
    const double x = kConstraintMax * k / 1000.0;
    conc_rel = std::max(conc_rel, std::abs(conc_bound_phi(x) - std::sqrt(tangle_bound_phi(x))));
  }
  s.at_most("conc_bound_phi = sqrt(tangle_bound_phi)", conc_rel, 1e-12);
}

void suite_region(VerifyReport& report, std::size_t samples, Rng& rng) {
  Suite s("region", report);
  double outside = 0.0;
  double recover = 0.0;
  double residual = 0.0;
  std::size_t misses = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const SchmidtVector mu = schmidt_decompose(haar_random_pure(4, 4, rng)).coefficients;
    const MeasurePoint p = measure_point(mu);
    outside = std::max({outside, p.n_t - upper_boundary(p.n_hat_phi),
                        lower_boundary(p.n_hat_phi) - p.n_t});
    double best = kInf;
    for (const auto& sol : solve_constraints(p.n_t, p.n_hat_phi, mu[3])) {
      if (!sol.valid) continue;
      residual = std::max({residual, sol.residuals[0], sol.residuals[1], sol.residuals[2]});
      double d = 0.0;
      for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(sol.mu[i] - mu[i]));
      best = std::min(best, d);
    }
    if (best == kInf) {
      ++misses;
    } else {
      recover = std::max(recover, best);
    }
  }
  s.at_most("Haar samples inside the pure-state region", outside, 1e-8);
  s.at_most("samples with no valid branch", static_cast<double>(misses), 0.0);
  s.at_most("branch recovers the sample's mu", recover, 1e-6);
  s.at_most("accepted branch residuals", residual, kResidualTol);

  // Brute force: random mu binned by n_hat_phi.
  constexpr int kBins = 40;
  std::vector<double> lo(kBins, kInf);
  std::vector<double> hi(kBins, -kInf);
  const std::size_t draws = std::max<std::size_t>(samples * 20, 40000);
  for (std::size_t k = 0; k < draws; ++k) {
    // Mixtures of the ordered-simplex vertices reach the edges, where the
    // extremes live.
    const double vert[4][4] = {{1, 0, 0, 0},
                               {0.5, 0.5, 0, 0},
                               {1.0 / 3, 1.0 / 3, 1.0 / 3, 0},
                               {0.25, 0.25, 0.25, 0.25}};
    double w[4] = {0.0, 0.0, 0.0, 0.0};
    double total = 0.0;
    if (k % 3 == 2) {
      // A point on one edge of the simplex.
      const auto a = static_cast<int>(rng.next_u64() % 4);
      const auto b = static_cast<int>((a + 1 + rng.next_u64() % 3) % 4);
      w[a] = rng.uniform();
      w[b] = 1.0 - w[a];
      total = 1.0;
    } else {
      for (double& x : w) {
        x = rng.gamma(k % 3 == 0 ? 1.0 : 0.2);
        total += x;
      }
    }
    std::vector<double> mu(4, 0.0);
    for (int a = 0; a < 4; ++a)
      for (int i = 0; i < 4; ++i) mu[i] += w[a] / total * vert[a][i];
    const SchmidtVector sv(mu);
    const MeasurePoint p = measure_point(sv);
    const int bin = std::min(kBins - 1, static_cast<int>(p.n_hat_phi / kConstraintMax * kBins));
    lo[bin] = std::min(lo[bin], p.n_t);
    hi[bin] = std::max(hi[bin], p.n_t);
  }
  // Each bin's extremes must sit inside the boundaries and reach them to
  // within the bin's own boundary variation.
  double escape = 0.0;
  double slack_lo = 0.0;
  double slack_hi = 0.0;
  for (int b = 0; b < kBins; ++b) {
    if (lo[b] == kInf) continue;
    const double left = kConstraintMax * b / kBins;
    const double right = kConstraintMax * (b + 1) / kBins;
    escape = std::max({escape, lower_boundary(left) - lo[b], hi[b] - upper_boundary(right)});
    slack_lo = std::max(slack_lo, lo[b] - lower_boundary(right));
    slack_hi = std::max(slack_hi, upper_boundary(left) - hi[b]);
  }
  s.at_most("sampled n_T never outside the boundaries", escape, 1e-9);
  s.at_most("empirical min n_T per bin reaches the lower boundary", slack_lo, 5e-3);
  s.at_most("empirical max n_T per bin reaches the upper boundary", slack_hi, 5e-3);
}

void suite_surface(VerifyReport& report, std::size_t samples, Rng& rng) {
  Suite s("surface", report);
  SurfaceParams params;
  const SurfaceBuild eof = build_bound_surface(Measure::Eof, params);
  const auto mono = check_monotone(eof.surface.grid);
  s.at_least("EOF surface monotone along n_hat_phi", mono.min_dx, 1e-9);
  s.at_least("EOF surface monotone along n_T", mono.min_dy, 1e-9);
  s.at_most("EOF diagonal vs eof_bound_nt", diagonal_consistency(eof.surface), 2e-2);
  s.at_most("monotone envelope is a no-op on G~ (EOF)", eof.monotone_change, 1e-9);
  s.at_most("coverage gap fraction", eof.surface.provenance.coverage.gap_fraction(), 0.01);

  double dominance = kInf;
  const auto& g = eof.surface.grid;
  for (int i = 0; i < g.nx(); ++i)
    for (int j = 0; j < g.ny(); ++j)
      if (eof.gtilde.defined(i, j))
        dominance = std::min(dominance, eof.gtilde.value(i, j) - g.value(i, j));
  s.at_least("envelope stays below G~", dominance, 1e-9);

  const SurfaceBuild surfaces[] = {eof, build_bound_surface(Measure::Tangle, params),
                                   build_bound_surface(Measure::Concurrence, params)};
  double validity = kInf;
  for (std::size_t k = 0; k < samples; ++k) {
    const SchmidtVector mu = schmidt_decompose(haar_random_pure(4, 4, rng)).coefficients;
    const MeasurePoint p = measure_point(mu);
    for (const auto& b : surfaces)
      validity = std::min(validity, measure_pure(b.surface.measure, mu) - query(b.surface, p));
  }
  s.at_least("surfaces below pure-state measures", validity, 2e-2);

  double single = kInf;
  for (const auto& b : surfaces)
    for (int i = 0; i < g.nx(); ++i)
      for (int j = 0; j < g.ny(); ++j) {
        const double x = g.x(i);
        const double y = g.y(j);
        const double best = std::max(single_bound(b.surface.measure, Constraint::NPHI, x),
                                     single_bound(b.surface.measure, Constraint::NT, y));
        single = std::min(single, b.surface.grid.value(i, j) - best);
      }
  s.at_least("double bound never materially below single bounds", single, 2e-2);

  // The envelope of a monotone function is monotone.
  double worst = kInf;
  double idem = 0.0;
  for (int t = 0; t < 20; ++t) {
    GridFunction2D f(25, 25);
    const double a = rng.uniform();
    const double b = rng.uniform();
    const double c = rng.uniform() * 3.0;
    for (int i = 0; i < 25; ++i)
      for (int j = 0; j < 25; ++j) {
        const double x = f.x(i);
        const double y = f.y(j);
        f.set(i, j, a * x * x + b * std::sqrt(y) + std::sin(c * x * y) * 0.1 + 0.3 * x * y);
      }
    // Make it monotone by running maxima, then envelope.
    for (int i = 0; i < 25; ++i)
      for (int j = 0; j < 25; ++j) {
        double v = f.value(i, j);
        if (i > 0) v = std::max(v, f.value(i - 1, j));
        if (j > 0) v = std::max(v, f.value(i, j - 1));
        f.set(i, j, v);
      }
    const GridFunction2D env = lower_convex_envelope(f);
    const auto m = check_monotone(env);
    worst = std::min({worst, m.min_dx, m.min_dy});
    const GridFunction2D env2 = lower_convex_envelope(env);
    for (int i = 0; i < 25; ++i)
      for (int j = 0; j < 25; ++j) idem = std::max(idem, std::abs(env2.value(i, j) - env.value(i, j)));
  }
  s.at_least("envelope of monotone grids is monotone", worst, 1e-9);
  s.at_most("envelope idempotent", idem, 1e-9);
}

void suite_spectrum(VerifyReport& report, std::size_t samples, Rng& rng) {
  Suite s("spectrum", report);
  for (std::size_t d : {std::size_t{4}, std::size_t{6}}) {
    double diff = 0.0;
    double trace = 0.0;
    double tnorm = 0.0;
    bool one_negative = true;
    bool counts = true;
    const std::size_t n = std::max<std::size_t>(samples / 10, 20);
    for (std::size_t k = 0; k < n; ++k) {
      const SchmidtVector mu = random_schmidt(d, rng);
      diff = std::max(diff, verify_against_direct(mu, d));
      const SpectrumSummary sp = predicted_spectrum(d, mu);
      const auto all = sp.all();
      counts = counts && all.size() == d * d && sp.zero_count == d * (d + 1) / 2 &&
               sp.pair_eigenvalues.size() == d * (d - 2) / 2;
      double sum = 0.0;
      double abs_sum = 0.0;
      for (double ev : all) {
        sum += ev;
        abs_sum += std::abs(ev);
      }
      trace = std::max(trace, std::abs(sum - static_cast<double>(d - 2)));
      const auto negatives = std::count_if(sp.r_roots.begin(), sp.r_roots.end(),
                                           [](double r) { return r < 0.0; });
      one_negative = one_negative && negatives == 1;
      if (d == 4) {
        tnorm = std::max(tnorm, std::abs(abs_sum - 2.0 * (1.0 + std::sqrt((mu[0] + mu[3]) *
                                                                          (mu[1] + mu[2])))));
      }
    }
    const std::string tag = "D=" + std::to_string(d) + ": ";
    s.at_most(tag + "predicted vs direct spectrum", diff, 1e-8);
    s.at_most(tag + "predicted eigenvalues sum to D - 2", trace, 1e-9);
    s.flag(tag + "eigenvalue counts", counts);
    s.flag(tag + "exactly one negative r-root", one_negative);
    if (d == 4) s.at_most(tag + "sum |eigenvalues| matches trace-norm closed form", tnorm, 1e-9);
  }
}

using SuiteFn = void (*)(VerifyReport&, std::size_t, Rng&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"linalg", suite_linalg}, {"measures", suite_measures}, {"bounds", suite_bounds},
      {"region", suite_region}, {"surface", suite_surface},   {"spectrum", suite_spectrum}};
  return r;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string VerifyReport::to_json() const {
  nlohmann::json doc;
  doc["passed"] = passed();
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json item = {{"suite", c.suite}, {"name", c.name},           {"pass", c.pass},
                           {"value", c.value}, {"tolerance", c.tolerance}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    doc["checks"].push_back(std::move(item));
  }
  return doc.dump(2);
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

VerifyReport run_verify(std::string_view suite, std::size_t samples, std::uint64_t seed) {
  VerifyReport report;
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    Rng rng(seed);
    fn(report, samples, rng);
  }
  if (!found) throw Error(ErrorCode::DomainError, "unknown verify suite '" + std::string(suite) + "'");
  return report;
}

}  // namespace entbound
