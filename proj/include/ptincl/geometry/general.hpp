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

#ifndef PTINCL_GEOMETRY_GENERAL_HPP_
#define PTINCL_GEOMETRY_GENERAL_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "ptincl/geometry/types.hpp"

namespace ptincl::geometry {

// Rings must be simple, pairwise disjoint, free of straight (theta = pi)
// vertices, and oriented so that a ring nested inside an even number of other
// rings is an outer ring and one nested inside an odd number is a hole.
std::optional<PolygonViolation> ValidatePolygon(
    const GeneralPolygon& poly, int64_t coord_bound = kDefaultCoordBound);

// Included angle at vertex i of a ring whose interior is on the left.
// Throws Error(kDegenerateVertex) for collinear or zero-length edges.
VertexAngleInfo IncludedAngle(const Ring& ring, size_t i);

// All vertex infos of the polygon in ring order.
std::vector<VertexAngleInfo> VertexAngles(const GeneralPolygon& poly);

enum class WedgeClass { kInner, kOuter };

// The inner wedges are the sector spanned by the two incident edges that is
// narrower than a half turn, and its vertical opposite. Throws Error(kOnRay)
// when m lies on one of the four rays (or on the vertex itself).
WedgeClass ClassifyWedge(const VertexAngleInfo& info, Point m);

bool OnVertexRays(const VertexAngleInfo& info, Point m);
bool OnAnyVertexRay(const GeneralPolygon& poly, Point m);

// Convex vertex: 1/2 - theta/2pi (inner), -theta/2pi (outer).
// Concave vertex: 1/2 - theta/2pi (inner), 1 - theta/2pi (outer).
double CrossFunction(const VertexAngleInfo& info, Point m);

// Sum of the cross functions over every vertex of every ring.
double CrossFunctionSum(const GeneralPolygon& poly, Point m);

// Rounded sum of the cross functions. Throws Error(kConsistency) when the sum
// is not within `tolerance` of 0 or 1.
int Characteristic(const GeneralPolygon& poly, Point m,
                   double tolerance = kDefaultChiTolerance);

// Exact even-odd reference test; boundary points count as inside.
Location OracleContains(const GeneralPolygon& poly, Point m);
Location OracleContains(const StarPolygon& star, Point m);

// Converts a star polygon into a single outer ring.
GeneralPolygon ToGeneral(const StarPolygon& star);

}  // namespace ptincl::geometry

#endif  // PTINCL_GEOMETRY_GENERAL_HPP_
