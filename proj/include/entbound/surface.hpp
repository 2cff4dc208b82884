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

#ifndef ENTBOUND_SURFACE_HPP
#define ENTBOUND_SURFACE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "entbound/measures.hpp"
#include "entbound/region.hpp"
#include "entbound/single_bounds.hpp"

namespace entbound {

/// Node values on a uniform grid over [0, 3/2]^2, x = n_hat_phi (index i),
/// y = n_T (index j). Cells without data carry mask 0.
class GridFunction2D {
 public:
  GridFunction2D() = default;
  GridFunction2D(int nx, int ny);

  int nx() const noexcept { return nx_; }
  int ny() const noexcept { return ny_; }
  double x(int i) const;
  double y(int j) const;
  double dx() const { return kConstraintMax / (nx_ - 1); }
  double dy() const { return kConstraintMax / (ny_ - 1); }

  bool defined(int i, int j) const { return mask_[index(i, j)] != 0; }
  double value(int i, int j) const { return values_[index(i, j)]; }
  void set(int i, int j, double v) {
    values_[index(i, j)] = v;
    mask_[index(i, j)] = 1;
  }
  void unset(int i, int j) {
    values_[index(i, j)] = 0.0;
    mask_[index(i, j)] = 0;
  }

  std::size_t defined_count() const;
  bool fully_defined() const { return defined_count() == values_.size(); }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(ny_) +
           static_cast<std::size_t>(j);
  }

  int nx_ = 0;
  int ny_ = 0;
  std::vector<double> values_;
  std::vector<std::uint8_t> mask_;
};

/// Smallest discrete differences along each axis over pairs of defined
/// neighbours; +inf if no pair exists.
struct MonotonicityReport {
  double min_dx = 0.0;
  double min_dy = 0.0;
  bool ok(double tol = 1e-9) const { return min_dx >= -tol && min_dy >= -tol; }
};
MonotonicityReport check_monotone(const GridFunction2D& g);

struct CoverageReport {
  std::size_t in_region = 0;   // nodes inside the pure-state region
  std::size_t covered = 0;     // nodes where some branch was valid
  std::size_t filled = 0;      // gaps filled from a neighbour
  std::size_t scan_covered = 0;  // nodes the plain uniform mu4 scan reaches
  double gap_fraction() const {
    return in_region == 0 ? 0.0 : static_cast<double>(in_region - covered) / in_region;
  }
};

struct GtildeOptions {
  int nx = 150;
  int ny = 150;
  int mu4_steps = 101;
  int threads = 1;
  /// Also run the plain uniform scan per node to fill CoverageReport::scan_covered.
  bool count_scan_coverage = true;
};

/// Minimum of the pure-state measure over mu with the node's (n_hat_phi, n_T).
/// Returns +inf when no branch is valid for any mu4.
double gtilde_at(Measure m, const MeasurePoint& p, int mu4_steps);

GridFunction2D build_gtilde(Measure m, const GtildeOptions& opts, CoverageReport* coverage);

/// Nodes inside the pure-state region that are still undefined get the value
/// of the nearest defined node in the same column (then row). Returns count.
std::size_t fill_gaps(GridFunction2D& g);

/// Discrete form of the monotone construction: along n_T and then along
/// n_hat_phi every value is replaced by the minimum over the values ahead of
/// it. Below the minimizer this yields the minimum itself, beyond it the
/// function is left alone wherever it is already nondecreasing.
GridFunction2D monotone_envelope(const GridFunction2D& g, const RegionBoundary& region);

/// Largest convex function below g on the convex hull of the defined nodes,
/// sampled at the grid nodes inside that hull.
GridFunction2D lower_convex_envelope(const GridFunction2D& g);

/// Lower convex envelope of samples (x ascending), evaluated at the same x.
std::vector<double> lower_convex_envelope_1d(std::span<const double> x,
                                             std::span<const double> y);

/// Fills the square: constant along n_T below the defined part of a column,
/// constant along n_hat_phi left of the defined part of a row, the larger of
/// the two where both apply, then max(left, below) for anything left over.
GridFunction2D extend_monotone(const GridFunction2D& g, const RegionBoundary& region);

struct Provenance {
  int nx = 0;
  int ny = 0;
  int mu4_steps = 0;
  std::uint64_t seed = 0;
  std::string timestamp;
  std::string version;
  CoverageReport coverage;
};

struct BoundSurface {
  Measure measure = Measure::Eof;
  GridFunction2D grid;
  Provenance provenance;
};

struct SurfaceParams {
  int nx = 150;
  int ny = 150;
  int mu4_steps = 101;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct SurfaceBuild {
  BoundSurface surface;
  GridFunction2D gtilde;   // after gap filling, before any envelope
  double monotone_change;  // max |monotone_envelope(g) - g|
};

/// gtilde -> monotone envelope -> extension to the square -> convex envelope.
SurfaceBuild build_bound_surface(Measure m, const SurfaceParams& params);

/// Bilinear interpolation; DomainError outside [0, 3/2]^2 (1e-9 slack).
double query(const BoundSurface& s, const MeasurePoint& p);

/// max_t |query(s, (t, t)) - eof_bound_nt(t)| over the diagonal nodes.
double diagonal_consistency(const BoundSurface& s);

/// Writes dir/surface.csv and dir/manifest.json (creates dir).
void save_surface(const BoundSurface& s, const std::string& dir);
/// Validates the manifest and the monotonicity of the stored values.
BoundSurface load_surface(const std::string& dir);

}  // namespace entbound

#endif  // ENTBOUND_SURFACE_HPP
