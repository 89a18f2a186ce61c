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

#ifndef PTINCL_GEOMETRY_TYPES_HPP_
#define PTINCL_GEOMETRY_TYPES_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ptincl::geometry {

// Coordinates are integers bounded by this value in absolute terms. All
// determinants of bounded points stay below 2^43.
inline constexpr int64_t kDefaultCoordBound = int64_t{1} << 20;

// Tolerance used when rounding the sum of cross functions.
inline constexpr double kDefaultChiTolerance = 1e-6;

struct Point {
  int64_t x = 0;
  int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Alice's private input.
using QueryPoint = Point;

inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a) { return {-a.x, -a.y}; }

// Counterclockwise polygon that is star-shaped with respect to `kernel`.
struct StarPolygon {
  std::vector<Point> vertices;
  Point kernel;
};

enum class RingRole { kOuter, kHole };

// Outer rings run counterclockwise and holes clockwise, so the interior is
// always on the left of the traversal.
struct Ring {
  std::vector<Point> vertices;
  RingRole role = RingRole::kOuter;
};

struct GeneralPolygon {
  std::vector<Ring> rings;

  size_t vertex_count() const;
};

using Triple = std::array<int64_t, 3>;

inline int64_t Dot(const Triple& u, const Triple& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

// Linear-form encodings of the star tests: A.B_i is the orientation of
// (M, Q, P_i) and A.C_i the orientation of (P_i, P_{i+1}, M).
struct DerivedVectors {
  Triple a;
  std::vector<Triple> b;
  std::vector<Triple> c;
};

struct VertexAngleInfo {
  size_t index = 0;
  Point vertex;
  Point to_prev;  // direction of the incoming edge, reversed
  Point to_next;  // direction of the outgoing edge
  double theta = 0.0;
  bool convex = false;

  // Directions of the four rays cut by extending both incident edges:
  // {to_prev, to_next, -to_prev, -to_next}.
  std::array<Point, 4> rays() const {
    return {to_prev, to_next, -to_prev, -to_next};
  }
};

enum class Location { kOutside, kInside, kBoundary };

inline bool IsInside(Location loc) { return loc != Location::kOutside; }
const char* LocationName(Location loc);

enum class StarViolationKind {
  kTooFewVertices,
  kCoordinateOverflow,
  kDuplicateVertex,
  kNotCounterclockwise,
  kKernelOutside,
};

struct StarViolation {
  StarViolationKind kind;
  size_t index = 0;
  std::string message;
};

const char* StarViolationName(StarViolationKind kind);

enum class PolygonViolationKind {
  kNoRings,
  kTooFewVertices,
  kCoordinateOverflow,
  kDuplicateVertex,
  kDegenerateVertex,
  kSelfIntersection,
  kRingsCross,
  kWrongOrientation,
  kBadNesting,
};

struct PolygonViolation {
  PolygonViolationKind kind;
  size_t ring = 0;
  size_t index = 0;
  std::string message;
};

const char* PolygonViolationName(PolygonViolationKind kind);

}  // namespace ptincl::geometry

#endif  // PTINCL_GEOMETRY_TYPES_HPP_
