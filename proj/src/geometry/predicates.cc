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

#include "ptincl/geometry/predicates.hpp"

#include <algorithm>
#include <cstdlib>

namespace ptincl::geometry {

size_t GeneralPolygon::vertex_count() const {
  size_t n = 0;
  for (const Ring& ring : rings) n += ring.vertices.size();
  return n;
}

const char* LocationName(Location loc) {
  switch (loc) {
    case Location::kOutside: return "outside";
    case Location::kInside: return "inside";
    case Location::kBoundary: return "inside (boundary)";
  }
  return "unknown";
}

const char* StarViolationName(StarViolationKind kind) {
  switch (kind) {
    case StarViolationKind::kTooFewVertices: return "too-few-vertices";
    case StarViolationKind::kCoordinateOverflow: return "overflow";
    case StarViolationKind::kDuplicateVertex: return "duplicate-vertex";
    case StarViolationKind::kNotCounterclockwise: return "not-counterclockwise";
    case StarViolationKind::kKernelOutside: return "kernel-outside";
  }
  return "unknown";
}

const char* PolygonViolationName(PolygonViolationKind kind) {
  switch (kind) {
    case PolygonViolationKind::kNoRings: return "no-rings";
    case PolygonViolationKind::kTooFewVertices: return "too-few-vertices";
    case PolygonViolationKind::kCoordinateOverflow: return "overflow";
    case PolygonViolationKind::kDuplicateVertex: return "duplicate-vertex";
    case PolygonViolationKind::kDegenerateVertex: return "degenerate-vertex";
    case PolygonViolationKind::kSelfIntersection: return "self-intersection";
    case PolygonViolationKind::kRingsCross: return "rings-cross";
    case PolygonViolationKind::kWrongOrientation: return "wrong-orientation";
    case PolygonViolationKind::kBadNesting: return "bad-nesting";
  }
  return "unknown";
}

int64_t SignedArea2(Point p1, Point p2, Point p3) {
  return p1.x * (p2.y - p3.y) - p1.y * (p2.x - p3.x) +
         (p2.x * p3.y - p3.x * p2.y);
}

bool WithinBound(Point p, int64_t bound) {
  return std::llabs(p.x) <= bound && std::llabs(p.y) <= bound;
}

int64_t RingArea2(std::span<const Point> ring) {
  int64_t sum = 0;
  for (size_t i = 0; i < ring.size(); ++i) {
    sum += Cross(ring[i], ring[(i + 1) % ring.size()]);
  }
  return sum;
}

bool OnSegment(Point a, Point b, Point p) {
  if (SignedArea2(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool SegmentsIntersect(Point a, Point b, Point c, Point d) {
  const int d1 = Sign(SignedArea2(c, d, a));
  const int d2 = Sign(SignedArea2(c, d, b));
  const int d3 = Sign(SignedArea2(a, b, c));
  const int d4 = Sign(SignedArea2(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return OnSegment(c, d, a) || OnSegment(c, d, b) || OnSegment(a, b, c) ||
         OnSegment(a, b, d);
}

Location RingLocation(std::span<const Point> ring, Point m) {
  bool inside = false;
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Point p = ring[i];
    const Point q = ring[(i + 1) % n];
    if (OnSegment(p, q, m)) return Location::kBoundary;
    // Half-open rule on y so that a vertex on the ray counts once.
    if ((p.y > m.y) != (q.y > m.y)) {
      // Crossing is to the right of m iff m is on the left of the upward
      // directed edge.
      const Point lo = p.y < q.y ? p : q;
      const Point hi = p.y < q.y ? q : p;
      if (SignedArea2(lo, hi, m) > 0) inside = !inside;
    }
  }
  return inside ? Location::kInside : Location::kOutside;
}

}  // namespace ptincl::geometry
