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

#include "entbound/surface.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "entbound/error.hpp"
#include "entbound/io.hpp"
#include "entbound/version.hpp"
#include "hull3d.hpp"

namespace entbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRegionTol = 1e-9;
constexpr int kIntervalSamples = 41;
constexpr int kGoldenIters = 60;

double measure_of(Measure m, const std::array<double, 4>& mu) {
  switch (m) {
    case Measure::Eof: {
      double h = 0.0;
      for (double x : mu)
        if (x > 0.0) h -= x * std::log2(x);
      return std::max(h, 0.0);
    }
    case Measure::Tangle:
    case Measure::Concurrence: {
      double p = 0.0;
      for (double x : mu) p += x * x;
      const double t = std::max(2.0 * (1.0 - p), 0.0);
      return m == Measure::Tangle ? t : std::sqrt(t);
    }
  }
  return kInf;
}

// Minimum over mu4 of one branch. The valid mu4 form an interval, and the
// minimum may sit strictly inside it, so we sample the interval (plus the
// uniform scan nodes that land in it) and polish the best sample by golden
// section.
double branch_minimum(Measure m, const MeasurePoint& p, int branch, int mu4_steps) {
  const auto iv = feasible_mu4_interval(p, branch);
  if (!iv) return kInf;
  const auto [lo, hi] = *iv;
  auto eval = [&](double mu4) {
    const BranchSolution sol = solve_branch(p.n_t, p.n_hat_phi, mu4, branch);
    return sol.valid ? measure_of(m, sol.mu) : kInf;
  };

  double best = kInf;
  double best_mu4 = lo;
  auto consider = [&](double mu4) {
    const double v = eval(mu4);
    if (v < best) {
      best = v;
      best_mu4 = mu4;
    }
  };
  for (int k = 0; k < kIntervalSamples; ++k)
    consider(lo + (hi - lo) * static_cast<double>(k) / (kIntervalSamples - 1));
  for (int k = 0; k < mu4_steps; ++k) {
    const double mu4 = 0.25 * static_cast<double>(k) / (mu4_steps - 1);
    if (mu4 >= lo && mu4 <= hi) consider(mu4);
  }
  if (best == kInf || hi <= lo) return best;

  const double h = (hi - lo) / (kIntervalSamples - 1);
  double a = std::max(lo, best_mu4 - h);
  double b = std::min(hi, best_mu4 + h);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  for (int it = 0; it < kGoldenIters; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = eval(d);
    }
  }
  return std::min({best, fc, fd});
}

template <typename Fn>
void parallel_rows(int rows, int threads, Fn fn) {
  threads = std::max(1, std::min(threads, rows));
  if (threads == 1) {
    for (int i = 0; i < rows; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < rows; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

bool node_in_region(const GridFunction2D& g, int i, int j) {
  return in_pure_region({g.x(i), g.y(j)}, kRegionTol);
}

}  // namespace

GridFunction2D::GridFunction2D(int nx, int ny) : nx_(nx), ny_(ny) {
  if (nx < 2 || ny < 2) throw Error(ErrorCode::DomainError, "grid needs at least 2x2 nodes");
  values_.assign(static_cast<std::size_t>(nx) * ny, 0.0);
  mask_.assign(values_.size(), 0);
}

double GridFunction2D::x(int i) const {
  return i == nx_ - 1 ? kConstraintMax : kConstraintMax * i / (nx_ - 1);
}

double GridFunction2D::y(int j) const {
  return j == ny_ - 1 ? kConstraintMax : kConstraintMax * j / (ny_ - 1);
}

std::size_t GridFunction2D::defined_count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), 1));
}

MonotonicityReport check_monotone(const GridFunction2D& g) {
  MonotonicityReport r{kInf, kInf};
  for (int i = 0; i < g.nx(); ++i)
    for (int j = 0; j < g.ny(); ++j) {
      if (!g.defined(i, j)) continue;
      if (i + 1 < g.nx() && g.defined(i + 1, j))
        r.min_dx = std::min(r.min_dx, g.value(i + 1, j) - g.value(i, j));
      if (j + 1 < g.ny() && g.defined(i, j + 1))
        r.min_dy = std::min(r.min_dy, g.value(i, j + 1) - g.value(i, j));
    }
  return r;
}

double gtilde_at(Measure m, const MeasurePoint& p, int mu4_steps) {
  if (!in_pure_region(p, kRegionTol)) return kInf;
  return std::min(branch_minimum(m, p, 1, mu4_steps), branch_minimum(m, p, 2, mu4_steps));
}

GridFunction2D build_gtilde(Measure m, const GtildeOptions& opts, CoverageReport* coverage) {
  if (opts.mu4_steps < 2) throw Error(ErrorCode::DomainError, "mu4_steps must be >= 2");
  GridFunction2D g(opts.nx, opts.ny);
  std::vector<std::uint8_t> in_region(static_cast<std::size_t>(opts.nx) * opts.ny, 0);
  std::vector<std::uint8_t> scan_hit(in_region.size(), 0);

  parallel_rows(opts.nx, opts.threads, [&](int i) {
    for (int j = 0; j < opts.ny; ++j) {
      const MeasurePoint p{g.x(i), g.y(j)};
      if (!in_pure_region(p, kRegionTol)) continue;
      const std::size_t k = static_cast<std::size_t>(i) * opts.ny + j;
      in_region[k] = 1;
      const double v = gtilde_at(m, p, opts.mu4_steps);
      if (v < kInf) g.set(i, j, v);
      if (opts.count_scan_coverage && !feasible_mu4_scan(p, opts.mu4_steps).empty())
        scan_hit[k] = 1;
    }
  });

  if (coverage) {
    *coverage = CoverageReport{};
    for (std::size_t k = 0; k < in_region.size(); ++k) coverage->in_region += in_region[k];
    coverage->covered = g.defined_count();
    for (auto s : scan_hit) coverage->scan_covered += s;
  }
  return g;
}

std::size_t fill_gaps(GridFunction2D& g) {
  std::size_t filled = 0;
  const GridFunction2D src = g;
  for (int i = 0; i < g.nx(); ++i)
    for (int j = 0; j < g.ny(); ++j) {
      if (src.defined(i, j) || !node_in_region(g, i, j)) continue;
      // Nearest defined node, column first; ties take the smaller value so
      // the fill never raises the bound.
      bool done = false;
      for (int d = 1; d < std::max(g.nx(), g.ny()) && !done; ++d) {
        double v = kInf;
        for (int jj : {j - d, j + d})
          if (jj >= 0 && jj < g.ny() && src.defined(i, jj)) v = std::min(v, src.value(i, jj));
        if (v == kInf)
          for (int ii : {i - d, i + d})
            if (ii >= 0 && ii < g.nx() && src.defined(ii, j)) v = std::min(v, src.value(ii, j));
        if (v < kInf) {
          g.set(i, j, v);
          done = true;
        }
      }
      if (done) ++filled;
    }
  return filled;
}

GridFunction2D monotone_envelope(const GridFunction2D& g, const RegionBoundary& /*region*/) {
  // The mask already encodes the region, so the boundaries are implicit:
  // in every column (row) the first defined node is on the lower (upper)
  // boundary of the pure-state region.
  GridFunction2D out = g;
  for (int i = 0; i < out.nx(); ++i) {
    double ahead = kInf;
    for (int j = out.ny() - 1; j >= 0; --j) {
      if (!out.defined(i, j)) continue;
      ahead = std::min(ahead, out.value(i, j));
      out.set(i, j, ahead);
    }
  }
  for (int j = 0; j < out.ny(); ++j) {
    double ahead = kInf;
    for (int i = out.nx() - 1; i >= 0; --i) {
      if (!out.defined(i, j)) continue;
      ahead = std::min(ahead, out.value(i, j));
      out.set(i, j, ahead);
    }
  }
  return out;
}

std::vector<double> lower_convex_envelope_1d(std::span<const double> x,
                                             std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "1d envelope");
  const std::size_t n = x.size();
  std::vector<std::size_t> hull;
  for (std::size_t k = 0; k < n; ++k) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      // Drop b if it is not strictly below the chord a-k.
      const double cr = (x[b] - x[a]) * (y[k] - y[a]) - (y[b] - y[a]) * (x[k] - x[a]);
      if (cr <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }
  std::vector<double> out(n);
  std::size_t seg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    while (seg + 1 < hull.size() - 1 && x[hull[seg + 1]] < x[k]) ++seg;
    if (hull.size() == 1) {
      out[k] = y[hull[0]];
      continue;
    }
    const std::size_t a = hull[seg];
    const std::size_t b = hull[seg + 1];
    const double t = x[b] == x[a] ? 0.0 : (x[k] - x[a]) / (x[b] - x[a]);
    out[k] = y[a] + t * (y[b] - y[a]);
  }
  return out;
}

GridFunction2D lower_convex_envelope(const GridFunction2D& g) {
  GridFunction2D out(g.nx(), g.ny());
  std::vector<detail::Vec3> pts;
  std::vector<std::array<int, 2>> nodes;
  int imin = g.nx();
  int imax = -1;
  int jmin = g.ny();
  int jmax = -1;
  double zmin = kInf;
  double zmax = -kInf;
  for (int i = 0; i < g.nx(); ++i)
    for (int j = 0; j < g.ny(); ++j) {
      if (!g.defined(i, j)) continue;
      pts.push_back({g.x(i), g.y(j), g.value(i, j)});
      nodes.push_back({i, j});
      imin = std::min(imin, i);
      imax = std::max(imax, i);
      jmin = std::min(jmin, j);
      jmax = std::max(jmax, j);
      zmin = std::min(zmin, g.value(i, j));
      zmax = std::max(zmax, g.value(i, j));
    }
  if (pts.empty()) return out;

  // A single row or column has no 2D hull; do it in one dimension.
  if (imin == imax || jmin == jmax) {
    std::vector<double> xs;
    std::vector<double> zs;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      xs.push_back(imin == imax ? pts[k].y : pts[k].x);
      zs.push_back(pts[k].z);
    }
    const auto env = lower_convex_envelope_1d(xs, zs);
    const bool column = imin == imax;
    std::size_t k = 0;
    for (int t = column ? jmin : imin; t <= (column ? jmax : imax); ++t) {
      const double at = column ? g.y(t) : g.x(t);
      while (k + 2 < xs.size() && xs[k + 1] < at) ++k;
      double v = env[k];
      if (xs.size() > 1) {
        const double s = (at - xs[k]) / (xs[k + 1] - xs[k]);
        v = env[k] + std::clamp(s, 0.0, 1.0) * (env[k + 1] - env[k]);
      }
      if (column) {
        out.set(imin, t, v);
      } else {
        out.set(t, jmin, v);
      }
    }
    return out;
  }

  // An apex far above the data closes the hull from the top, so every face
  // with a downward normal belongs to the lower envelope.
  double mx = 0.0;
  double my = 0.0;
  for (const auto& p : pts) {
    mx += p.x;
    my += p.y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  const int apex = static_cast<int>(pts.size());
  pts.push_back({mx, my, zmax + (zmax - zmin) + 1.0});

  const auto faces = detail::convex_hull_3d(pts);
  std::vector<double> best(static_cast<std::size_t>(g.nx()) * g.ny(), -kInf);
  constexpr double kBaryTol = 1e-9;
  for (const auto& f : faces) {
    if (f.normal.z > -1e-9) continue;
    if (f.v[0] == apex || f.v[1] == apex || f.v[2] == apex) continue;
    const auto& a = pts[f.v[0]];
    const auto& b = pts[f.v[1]];
    const auto& c = pts[f.v[2]];
    const double area2 = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
    if (std::abs(area2) < 1e-14) continue;
    const int i0 = std::max(0, static_cast<int>(std::floor(std::min({a.x, b.x, c.x}) / g.dx())) - 1);
    const int i1 = std::min(g.nx() - 1, static_cast<int>(std::ceil(std::max({a.x, b.x, c.x}) / g.dx())) + 1);
    const int j0 = std::max(0, static_cast<int>(std::floor(std::min({a.y, b.y, c.y}) / g.dy())) - 1);
    const int j1 = std::min(g.ny() - 1, static_cast<int>(std::ceil(std::max({a.y, b.y, c.y}) / g.dy())) + 1);
    for (int i = i0; i <= i1; ++i)
      for (int j = j0; j <= j1; ++j) {
        const double px = g.x(i);
        const double py = g.y(j);
        const double l1 = ((px - a.x) * (c.y - a.y) - (c.x - a.x) * (py - a.y)) / area2;
        const double l2 = ((b.x - a.x) * (py - a.y) - (px - a.x) * (b.y - a.y)) / area2;
        const double l0 = 1.0 - l1 - l2;
        if (l0 < -kBaryTol || l1 < -kBaryTol || l2 < -kBaryTol) continue;
        const double z = (f.offset - f.normal.x * px - f.normal.y * py) / f.normal.z;
        auto& slot = best[static_cast<std::size_t>(i) * g.ny() + j];
        slot = std::max(slot, z);
      }
  }
  for (int i = 0; i < g.nx(); ++i)
    for (int j = 0; j < g.ny(); ++j) {
      const double v = best[static_cast<std::size_t>(i) * g.ny() + j];
      if (v > -kInf) out.set(i, j, v);
    }
  return out;
}

GridFunction2D extend_monotone(const GridFunction2D& g, const RegionBoundary& /*region*/) {
  const int nx = g.nx();
  const int ny = g.ny();
  GridFunction2D out = g;
  // Below a column's first defined node: constant along n_T.
  // Left of a row's first defined node: constant along n_hat_phi.
  std::vector<double> from_col(static_cast<std::size_t>(nx) * ny, -kInf);
  std::vector<double> from_row(from_col.size(), -kInf);
  for (int i = 0; i < nx; ++i) {
    int first = 0;
    while (first < ny && !g.defined(i, first)) ++first;
    for (int j = 0; j < first && first < ny; ++j)
      from_col[static_cast<std::size_t>(i) * ny + j] = g.value(i, first);
  }
  for (int j = 0; j < ny; ++j) {
    int first = 0;
    while (first < nx && !g.defined(first, j)) ++first;
    for (int i = 0; i < first && first < nx; ++i)
      from_row[static_cast<std::size_t>(i) * ny + j] = g.value(first, j);
  }
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      if (g.defined(i, j)) continue;
      const std::size_t k = static_cast<std::size_t>(i) * ny + j;
      const double v = std::max(from_col[k], from_row[k]);
      if (v > -kInf) out.set(i, j, v);
    }
  // Whatever neither rule reached (nodes right of or above the data, or a
  // column with no region node at all) takes max(left, below).
  for (int pass = 0; pass < 4 && !out.fully_defined(); ++pass)
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        if (out.defined(i, j)) continue;
        double v = -kInf;
        if (i > 0 && out.defined(i - 1, j)) v = std::max(v, out.value(i - 1, j));
        if (j > 0 && out.defined(i, j - 1)) v = std::max(v, out.value(i, j - 1));
        if (v > -kInf) out.set(i, j, v);
      }
  return out;
}

SurfaceBuild build_bound_surface(Measure m, const SurfaceParams& params) {
  const RegionBoundary region;
  CoverageReport coverage;
  GtildeOptions opts;
  opts.nx = params.nx;
  opts.ny = params.ny;
  opts.mu4_steps = params.mu4_steps;
  opts.threads = params.threads;
  GridFunction2D gt = build_gtilde(m, opts, &coverage);
  coverage.filled = fill_gaps(gt);

  const GridFunction2D mono = monotone_envelope(gt, region);
  double change = 0.0;
  for (int i = 0; i < gt.nx(); ++i)
    for (int j = 0; j < gt.ny(); ++j)
      if (gt.defined(i, j)) change = std::max(change, std::abs(mono.value(i, j) - gt.value(i, j)));

  // Extending first and enveloping over the whole square keeps the result
  // monotone: the envelope of a nondecreasing function on a box is
  // nondecreasing, which is not true on the (non-box) hull of the region.
  const GridFunction2D ext = extend_monotone(mono, region);
  GridFunction2D env = lower_convex_envelope(ext);
  if (!env.fully_defined()) {
    throw Error(ErrorCode::ConvergenceFailure, "convex envelope left grid nodes uncovered");
  }

  SurfaceBuild build;
  build.surface.measure = m;
  build.surface.grid = std::move(env);
  build.surface.provenance = Provenance{params.nx,     params.ny,           params.mu4_steps,
                                        params.seed,   utc_timestamp(),     std::string(kVersion),
                                        coverage};
  build.gtilde = std::move(gt);
  build.monotone_change = change;
  return build;
}

double query(const BoundSurface& s, const MeasurePoint& p) {
  const auto& g = s.grid;
  auto check = [](double v, const char* what) {
    if (!(v >= -1e-9 && v <= kConstraintMax + 1e-9)) {
      throw Error(ErrorCode::DomainError,
                  std::string(what) + " " + std::to_string(v) + " outside [0, 3/2]");
    }
    return std::clamp(v, 0.0, kConstraintMax);
  };
  const double x = check(p.n_hat_phi, "n_hat_phi");
  const double y = check(p.n_t, "n_t");
  const int i = std::min(static_cast<int>(x / g.dx()), g.nx() - 2);
  const int j = std::min(static_cast<int>(y / g.dy()), g.ny() - 2);
  const double tx = (x - g.x(i)) / g.dx();
  const double ty = (y - g.y(j)) / g.dy();
  return (1 - tx) * (1 - ty) * g.value(i, j) + tx * (1 - ty) * g.value(i + 1, j) +
         (1 - tx) * ty * g.value(i, j + 1) + tx * ty * g.value(i + 1, j + 1);
}

double diagonal_consistency(const BoundSurface& s) {
  const int n = std::max(s.grid.nx(), s.grid.ny());
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = k == n - 1 ? kConstraintMax : kConstraintMax * k / (n - 1);
    worst = std::max(worst, std::abs(query(s, {t, t}) - eof_bound_nt(t)));
  }
  return worst;
}

namespace {

using nlohmann::json;

json coverage_json(const CoverageReport& c) {
  return {{"in_region", c.in_region},
          {"covered", c.covered},
          {"filled", c.filled},
          {"scan_covered", c.scan_covered},
          {"gap_fraction", c.gap_fraction()}};
}

}  // namespace

void save_surface(const BoundSurface& s, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IOError, "cannot create " + dir + ": " + ec.message());
  std::ostringstream csv;
  csv << "n_hat_phi,n_t,value\n";
  for (int i = 0; i < s.grid.nx(); ++i)
    for (int j = 0; j < s.grid.ny(); ++j)
      csv << fmt(s.grid.x(i)) << ',' << fmt(s.grid.y(j)) << ',' << fmt(s.grid.value(i, j))
          << '\n';
  write_file_atomic(dir + "/surface.csv", csv.str());

  const auto& pv = s.provenance;
  json manifest = {{"measure", std::string(to_string(s.measure))},
                   {"nx", pv.nx},
                   {"ny", pv.ny},
                   {"mu4_steps", pv.mu4_steps},
                   {"seed", pv.seed},
                   {"timestamp", pv.timestamp},
                   {"coverage", coverage_json(pv.coverage)},
                   {"version", pv.version}};
  write_file_atomic(dir + "/manifest.json", manifest.dump(2) + "\n");
}

BoundSurface load_surface(const std::string& dir) {
  json manifest;
  try {
    manifest = json::parse(read_file(dir + "/manifest.json"));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, "manifest.json: " + std::string(e.what()));
  }
  BoundSurface s;
  try {
    const auto measure = parse_measure(manifest.at("measure").get<std::string>());
    if (!measure) throw Error(ErrorCode::ParseError, "manifest.json: unknown measure");
    s.measure = *measure;
    auto& pv = s.provenance;
    pv.nx = manifest.at("nx").get<int>();
    pv.ny = manifest.at("ny").get<int>();
    pv.mu4_steps = manifest.at("mu4_steps").get<int>();
    pv.seed = manifest.at("seed").get<std::uint64_t>();
    pv.timestamp = manifest.at("timestamp").get<std::string>();
    pv.version = manifest.at("version").get<std::string>();
    const auto& cov = manifest.at("coverage");
    pv.coverage.in_region = cov.at("in_region").get<std::size_t>();
    pv.coverage.covered = cov.at("covered").get<std::size_t>();
    pv.coverage.filled = cov.at("filled").get<std::size_t>();
    pv.coverage.scan_covered = cov.at("scan_covered").get<std::size_t>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, "manifest.json: " + std::string(e.what()));
  }

  s.grid = GridFunction2D(s.provenance.nx, s.provenance.ny);
  std::istringstream csv(read_file(dir + "/surface.csv"));
  std::string line;
  std::getline(csv, line);
  if (line.rfind("n_hat_phi,n_t,value", 0) != 0) {
    throw Error(ErrorCode::ParseError, "surface.csv: unexpected header '" + line + "'");
  }
  int row = 0;
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    double x = 0.0;
    double y = 0.0;
    double v = 0.0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &y, &v) != 3) {
      throw Error(ErrorCode::ParseError,
                  "surface.csv line " + std::to_string(row + 2) + ": '" + line + "'");
    }
    const int i = static_cast<int>(std::lround(x / s.grid.dx()));
    const int j = static_cast<int>(std::lround(y / s.grid.dy()));
    if (i < 0 || i >= s.grid.nx() || j < 0 || j >= s.grid.ny() ||
        std::abs(s.grid.x(i) - x) > 1e-9 || std::abs(s.grid.y(j) - y) > 1e-9) {
      throw Error(ErrorCode::ParseError,
                  "surface.csv line " + std::to_string(row + 2) + ": off-grid point");
    }
    s.grid.set(i, j, v);
    ++row;
  }
  if (!s.grid.fully_defined()) {
    throw Error(ErrorCode::ParseError, "surface.csv does not cover the " +
                                           std::to_string(s.grid.nx()) + "x" +
                                           std::to_string(s.grid.ny()) + " grid");
  }
  const auto mono = check_monotone(s.grid);
  if (!mono.ok()) {
    throw Error(ErrorCode::DomainError, "stored surface is not monotone (min step " +
                                            std::to_string(std::min(mono.min_dx, mono.min_dy)) +
                                            ")");
  }
  return s;
}

}  // namespace entbound
