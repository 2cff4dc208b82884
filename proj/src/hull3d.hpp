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

// Private to the library: a small quickhull used by the convex envelope.

#ifndef ENTBOUND_SRC_HULL3D_HPP
#define ENTBOUND_SRC_HULL3D_HPP

#include <array>
#include <vector>

namespace entbound::detail {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct HullFace {
  std::array<int, 3> v{};  // counter-clockwise seen from outside
  Vec3 normal;             // unit, outward
  double offset = 0.0;     // normal . p == offset on the face
};

/// Convex hull of `pts`. Points closer than `eps` (relative to the coordinate
/// scale) to the current hull are treated as inside, which is how coplanar
/// and collinear input is absorbed. Throws DomainError if the input does not
/// span three dimensions.
std::vector<HullFace> convex_hull_3d(const std::vector<Vec3>& pts, double eps = 1e-11);

}  // namespace entbound::detail

#endif  // ENTBOUND_SRC_HULL3D_HPP
