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

#ifndef PTINCL_GEOMETRY_STAR_HPP_
#define PTINCL_GEOMETRY_STAR_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ptincl/geometry/types.hpp"

namespace ptincl::geometry {

// Checks every StarPolygon invariant and reports the first violation found.
// Order of checks: vertex count, coordinate bound, duplicates, orientation,
// kernel.
std::optional<StarViolation> ValidateStar(
    const StarPolygon& star, int64_t coord_bound = kDefaultCoordBound);

// Alice's vector (a, b, 1).
Triple AliceVector(Point m);

Triple RayForm(const StarPolygon& star, size_t i);
Triple EdgeForm(const StarPolygon& star, size_t i);

// Bob's ray forms B_i = (-b_i, a_i, s*b_i - t*a_i), where (a_i, b_i) are the
// vertex coordinates relative to the kernel (s, t).
std::vector<Triple> RayForms(const StarPolygon& star);

// Bob's edge forms C_i for the edge P_i P_{i+1}, indices cyclic.
std::vector<Triple> EdgeForms(const StarPolygon& star);

DerivedVectors DeriveVectors(const StarPolygon& star, Point m);

struct WedgeLocation {
  size_t index = 0;
  // Number of orientation predicates evaluated by the search.
  size_t evaluations = 0;
};

// Binary search over the angular order around the kernel. Returns the
// smallest j with A.B_j >= 0 >= A.B_{j+1}, i.e. the closed wedge between the
// rays Q->P_j and Q->P_{j+1} that contains m.
WedgeLocation LocateWedge(const StarPolygon& star, Point m);

// Applies the same tie-break rule to a full vector of ray signs
// sign(A.B_i). Returns nullopt when no index qualifies, which only happens
// for inconsistent input.
std::optional<size_t> WedgeFromSigns(std::span<const int> ray_signs);

// Inside iff A.C_j >= 0 on the located wedge; zero means the boundary.
Location StarContains(const StarPolygon& star, Point m);

}  // namespace ptincl::geometry

#endif  // PTINCL_GEOMETRY_STAR_HPP_
