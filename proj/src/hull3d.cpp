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

#include "hull3d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "entbound/error.hpp"

namespace entbound::detail {

namespace {

Vec3 sub(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

struct Face {
  HullFace geom;
  std::vector<int> outside;  // conflict list
  bool alive = true;
};

class QuickHull {
 public:
  QuickHull(const std::vector<Vec3>& pts, double eps) : pts_(pts) {
    double scale = 1.0;
    for (const auto& p : pts_)
      scale = std::max({scale, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
    eps_ = eps * scale;
  }

  std::vector<HullFace> run() {
    build_simplex();
    std::vector<int> pending;
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f)
      if (!faces_[f].outside.empty()) pending.push_back(f);
    while (!pending.empty()) {
      const int f = pending.back();
      pending.pop_back();
      if (!faces_[f].alive || faces_[f].outside.empty()) continue;
      add_point(f, pending);
    }
    std::vector<HullFace> out;
    for (const auto& face : faces_)
      if (face.alive) out.push_back(face.geom);
    return out;
  }

 private:
  double distance(int f, int p) const {
    return dot(faces_[f].geom.normal, pts_[p]) - faces_[f].geom.offset;
  }

  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  int make_face(int a, int b, int c) {
    Face face;
    face.geom.v = {a, b, c};
    Vec3 n = cross(sub(pts_[b], pts_[a]), sub(pts_[c], pts_[a]));
    const double len = norm(n);
    if (len > 0.0) n = {n.x / len, n.y / len, n.z / len};
    face.geom.normal = n;
    face.geom.offset = dot(n, pts_[a]);
    const int id = static_cast<int>(faces_.size());
    faces_.push_back(std::move(face));
    edges_[key(a, b)] = id;
    edges_[key(b, c)] = id;
    edges_[key(c, a)] = id;
    return id;
  }

  void build_simplex() {
    const int n = static_cast<int>(pts_.size());
    if (n < 4) throw Error(ErrorCode::DomainError, "convex hull needs at least 4 points");

    // Two points far apart along the widest axis.
    int i0 = 0;
    int i1 = 0;
    double best_extent = -1.0;
    for (int axis = 0; axis < 3; ++axis) {
      auto coord = [axis](const Vec3& p) { return axis == 0 ? p.x : axis == 1 ? p.y : p.z; };
      int lo = 0;
      int hi = 0;
      for (int k = 1; k < n; ++k) {
        if (coord(pts_[k]) < coord(pts_[lo])) lo = k;
        if (coord(pts_[k]) > coord(pts_[hi])) hi = k;
      }
      const double extent = coord(pts_[hi]) - coord(pts_[lo]);
      if (extent > best_extent) {
        best_extent = extent;
        i0 = lo;
        i1 = hi;
      }
    }
    const Vec3 dir = sub(pts_[i1], pts_[i0]);
    int i2 = -1;
    double best = eps_;
    for (int k = 0; k < n; ++k) {
      const double d = norm(cross(dir, sub(pts_[k], pts_[i0]))) / std::max(norm(dir), 1e-300);
      if (d > best) {
        best = d;
        i2 = k;
      }
    }
    if (i2 < 0) throw Error(ErrorCode::DomainError, "convex hull input is collinear");
    Vec3 pn = cross(dir, sub(pts_[i2], pts_[i0]));
    pn = {pn.x / norm(pn), pn.y / norm(pn), pn.z / norm(pn)};
    int i3 = -1;
    best = eps_;
    for (int k = 0; k < n; ++k) {
      const double d = std::abs(dot(pn, sub(pts_[k], pts_[i0])));
      if (d > best) {
        best = d;
        i3 = k;
      }
    }
    if (i3 < 0) throw Error(ErrorCode::DomainError, "convex hull input is coplanar");

    // Orient so that i3 lies behind the base face.
    if (dot(pn, sub(pts_[i3], pts_[i0])) > 0.0) std::swap(i1, i2);
    const int base = make_face(i0, i1, i2);
    make_face(i0, i3, i1);
    make_face(i1, i3, i2);
    make_face(i2, i3, i0);
    (void)base;

    for (int k = 0; k < n; ++k) {
      if (k == i0 || k == i1 || k == i2 || k == i3) continue;
      assign(k, 0, 4);
    }
  }

  // Puts p into the conflict list of the first face in [first, last) it is
  // strictly outside of; otherwise the point is interior and dropped.
  void assign(int p, int first, int last) {
    for (int f = first; f < last; ++f) {
      if (faces_[f].alive && distance(f, p) > eps_) {
        faces_[f].outside.push_back(p);
        return;
      }
    }
  }

  void add_point(int start, std::vector<int>& pending) {
    const auto& cand = faces_[start].outside;
    int eye = cand.front();
    double far = distance(start, eye);
    for (int p : cand) {
      const double d = distance(start, p);
      if (d > far) {
        far = d;
        eye = p;
      }
    }

    // Faces visible from the eye, grown from `start` across shared edges.
    std::vector<int> visible{start};
    std::vector<char> seen(faces_.size(), 0);
    seen[start] = 1;
    std::vector<std::array<int, 2>> horizon;
    for (std::size_t k = 0; k < visible.size(); ++k) {
      const auto v = faces_[visible[k]].geom.v;
      for (int e = 0; e < 3; ++e) {
        const int a = v[e];
        const int b = v[(e + 1) % 3];
        const int nb = edges_.at(key(b, a));
        if (seen[nb]) {
          continue;
        }
        if (distance(nb, eye) > eps_) {
          seen[nb] = 1;
          visible.push_back(nb);
        }
      }
    }
    for (int f : visible) {
      const auto v = faces_[f].geom.v;
      for (int e = 0; e < 3; ++e) {
        const int a = v[e];
        const int b = v[(e + 1) % 3];
        const int nb = edges_.at(key(b, a));
        if (!seen[nb]) horizon.push_back({a, b});
      }
    }

    std::vector<int> orphans;
    for (int f : visible) {
      faces_[f].alive = false;
      const auto v = faces_[f].geom.v;
      for (int e = 0; e < 3; ++e) edges_.erase(key(v[e], v[(e + 1) % 3]));
      for (int p : faces_[f].outside)
        if (p != eye) orphans.push_back(p);
      faces_[f].outside.clear();
      faces_[f].outside.shrink_to_fit();
    }

    const int first_new = static_cast<int>(faces_.size());
    for (const auto& edge : horizon) make_face(edge[0], edge[1], eye);
    const int last_new = static_cast<int>(faces_.size());
    for (int p : orphans) assign(p, first_new, last_new);
    for (int f = first_new; f < last_new; ++f)
      if (!faces_[f].outside.empty()) pending.push_back(f);
  }

  const std::vector<Vec3>& pts_;
  double eps_ = 0.0;
  std::vector<Face> faces_;
  std::unordered_map<std::uint64_t, int> edges_;
};

}  // namespace

std::vector<HullFace> convex_hull_3d(const std::vector<Vec3>& pts, double eps) {
  return QuickHull(pts, eps).run();
}

}  // namespace entbound::detail
