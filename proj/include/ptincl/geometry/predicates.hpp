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

#ifndef PTINCL_GEOMETRY_PREDICATES_HPP_
#define PTINCL_GEOMETRY_PREDICATES_HPP_

#include <cstdint>
#include <span>

#include "ptincl/geometry/types.hpp"

namespace ptincl::geometry {

inline int64_t Cross(Point u, Point v) { return u.x * v.y - u.y * v.x; }
inline int64_t DotProduct(Point u, Point v) { return u.x * v.x + u.y * v.y; }

inline int Sign(int64_t v) { return (v > 0) - (v < 0); }

// Twice the signed area of (p1, p2, p3): the 3x3 determinant with rows
// (x, y, 1). Positive iff counterclockwise, zero iff collinear.
int64_t SignedArea2(Point p1, Point p2, Point p3);

bool WithinBound(Point p, int64_t bound);

// Twice the signed area enclosed by a closed vertex ring (shoelace).
int64_t RingArea2(std::span<const Point> ring);

// True when p lies on the closed segment [a, b].
bool OnSegment(Point a, Point b, Point p);

// True when the closed segments [a, b] and [c, d] share a point.
bool SegmentsIntersect(Point a, Point b, Point c, Point d);

// Even-odd ray crossing against one ring, exact. Points on the ring itself
// are reported as kBoundary.
Location RingLocation(std::span<const Point> ring, Point m);

}  // namespace ptincl::geometry

#endif  // PTINCL_GEOMETRY_PREDICATES_HPP_
