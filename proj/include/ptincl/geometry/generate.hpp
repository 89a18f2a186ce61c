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

#ifndef PTINCL_GEOMETRY_GENERATE_HPP_
#define PTINCL_GEOMETRY_GENERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ptincl/geometry/types.hpp"

namespace ptincl::geometry {

// Deterministic test-instance generators. Every returned instance passes the
// corresponding validator; generation gives up with Error(kGenerationFailure)
// after a bounded number of attempts.

struct StarGenOptions {
  int64_t min_radius = 200;
  int64_t max_radius = 5000;
  // The kernel is drawn uniformly from [-kernel_range, kernel_range]^2.
  int64_t kernel_range = 0;
};

StarPolygon GenerateStar(uint64_t seed, size_t n,
                         const StarGenOptions& options = {});

enum class NestedKind { kSquareWithHole, kRandom };

struct NestedSpec {
  NestedKind kind = NestedKind::kRandom;
  size_t components = 1;
  size_t holes_per_component = 0;
  // Places an outer ring inside the hole of each component (one hole only).
  bool island_in_hole = false;
  size_t min_vertices = 4;
  size_t max_vertices = 12;
  int64_t scale = 1000;
};

GeneralPolygon GenerateNested(uint64_t seed, const NestedSpec& spec);

// Convex polygon in counterclockwise order with no collinear vertices.
std::vector<Point> GenerateConvex(uint64_t seed, size_t n, int64_t radius);

}  // namespace ptincl::geometry

#endif  // PTINCL_GEOMETRY_GENERATE_HPP_
