/*
 * Copyright 2026 The ptincl Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ptincl/geometry/star.hpp"

#include <set>
#include <string>
#include <utility>

#include "ptincl/geometry/predicates.hpp"

namespace ptincl::geometry {

namespace {

// Number of times the kernel-relative directions pass over the direction of
// the first vertex while turning counterclockwise. Only meaningful when every
// consecutive turn is strictly positive and below a half turn.
size_t WindingAroundKernel(const std::vector<Point>& dirs) {
  const Point ref = dirs.front();
  size_t count = 0;
  for (size_t i = 0; i < dirs.size(); ++i) {
    const Point from = dirs[i];
    const Point to = dirs[(i + 1) % dirs.size()];
    if (Cross(from, ref) > 0 && Cross(ref, to) >= 0) ++count;
  }
  return count;
}

// 0 for directions in [0, pi) measured counterclockwise from ref, 1 for
// [pi, 2pi).
int HalfTurn(Point ref, Point v) {
  const int64_t c = Cross(ref, v);
  if (c > 0) return 0;
  if (c == 0 && DotProduct(ref, v) > 0) return 0;
  return 1;
}

}  // namespace

std::optional<StarViolation> ValidateStar(const StarPolygon& star,
                                          int64_t coord_bound) {
  const auto& v = star.vertices;
  if (v.size() < 3) {
    return StarViolation{StarViolationKind::kTooFewVertices, v.size(),
                         "a star polygon needs at least 3 vertices"};
  }
  if (!WithinBound(star.kernel, coord_bound)) {
    return StarViolation{StarViolationKind::kCoordinateOverflow, 0,
                         "kernel coordinates exceed the coordinate bound"};
  }
  for (size_t i = 0; i < v.size(); ++i) {
    if (!WithinBound(v[i], coord_bound)) {
      return StarViolation{StarViolationKind::kCoordinateOverflow, i,
                           "vertex " + std::to_string(i) +
                               " exceeds the coordinate bound"};
    }
  }
  std::set<std::pair<int64_t, int64_t>> seen;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!seen.insert({v[i].x, v[i].y}).second) {
      return StarViolation{StarViolationKind::kDuplicateVertex, i,
                           "vertex " + std::to_string(i) + " is repeated"};
    }
  }
  if (RingArea2(v) <= 0) {
    return StarViolation{StarViolationKind::kNotCounterclockwise, 0,
                         "vertices are not in counterclockwise order"};
  }
  std::vector<Point> dirs;
  dirs.reserve(v.size());
  for (const Point& p : v) dirs.push_back(p - star.kernel);
  for (size_t i = 0; i < dirs.size(); ++i) {
    if (Cross(dirs[i], dirs[(i + 1) % dirs.size()]) <= 0) {
      return StarViolation{StarViolationKind::kKernelOutside, i,
                           "kernel does not see edge " + std::to_string(i) +
                               " strictly from the inside"};
    }
  }
  if (WindingAroundKernel(dirs) != 1) {
    return StarViolation{StarViolationKind::kKernelOutside, 0,
                         "vertices wind around the kernel more than once"};
  }
  return std::nullopt;
}

Triple AliceVector(Point m) { return {m.x, m.y, 1}; }

Triple RayForm(const StarPolygon& star, size_t i) {
  const int64_t s = star.kernel.x;
  const int64_t t = star.kernel.y;
  const int64_t ai = star.vertices[i].x - s;
  const int64_t bi = star.vertices[i].y - t;
  return {-bi, ai, s * bi - t * ai};
}

Triple EdgeForm(const StarPolygon& star, size_t i) {
  const int64_t s = star.kernel.x;
  const int64_t t = star.kernel.y;
  const size_t n = star.vertices.size();
  const Point p = star.vertices[i] - star.kernel;
  const Point q = star.vertices[(i + 1) % n] - star.kernel;
  const int64_t db = p.y - q.y;
  const int64_t da = p.x - q.x;
  return {db, -da, -s * db + t * da + (p.x * q.y - p.y * q.x)};
}

std::vector<Triple> RayForms(const StarPolygon& star) {
  std::vector<Triple> forms;
  forms.reserve(star.vertices.size());
  for (size_t i = 0; i < star.vertices.size(); ++i) {
    forms.push_back(RayForm(star, i));
  }
  return forms;
}

std::vector<Triple> EdgeForms(const StarPolygon& star) {
  std::vector<Triple> forms;
  forms.reserve(star.vertices.size());
  for (size_t i = 0; i < star.vertices.size(); ++i) {
    forms.push_back(EdgeForm(star, i));
  }
  return forms;
}

DerivedVectors DeriveVectors(const StarPolygon& star, Point m) {
  return DerivedVectors{AliceVector(m), RayForms(star), EdgeForms(star)};
}

WedgeLocation LocateWedge(const StarPolygon& star, Point m) {
  const size_t n = star.vertices.size();
  const Point rel = m - star.kernel;
  WedgeLocation out;
  if (rel.x == 0 && rel.y == 0) return out;  // every wedge qualifies

  const Point ref = star.vertices[0] - star.kernel;
  ++out.evaluations;
  const int half_m = HalfTurn(ref, rel);
  auto before_point = [&](size_t k) {
    ++out.evaluations;
    const Point d = star.vertices[k] - star.kernel;
    const int half_k = HalfTurn(ref, d);
    if (half_k != half_m) return half_k < half_m;
    return Cross(d, rel) >= 0;
  };

  // Invariant: angle(P_lo) <= angle(m) < angle(P_hi), with P_n standing for
  // a full turn.
  size_t lo = 0;
  size_t hi = n;
  while (hi - lo > 1) {
    const size_t mid = lo + (hi - lo) / 2;
    if (before_point(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // m on the ray Q->P_lo also lies in the closed wedge lo-1.
  if (lo > 0 && Cross(star.vertices[lo] - star.kernel, rel) == 0) --lo;
  out.index = lo;
  return out;
}

std::optional<size_t> WedgeFromSigns(std::span<const int> ray_signs) {
  const size_t n = ray_signs.size();
  for (size_t j = 0; j < n; ++j) {
    if (ray_signs[j] >= 0 && ray_signs[(j + 1) % n] <= 0) return j;
  }
  return std::nullopt;
}

Location StarContains(const StarPolygon& star, Point m) {
  const size_t j = LocateWedge(star, m).index;
  const int64_t edge = Dot(AliceVector(m), EdgeForm(star, j));
  if (edge > 0) return Location::kInside;
  if (edge == 0) return Location::kBoundary;
  return Location::kOutside;
}

}  // namespace ptincl::geometry
