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

#ifndef PTINCL_GEOMETRY_IO_HPP_
#define PTINCL_GEOMETRY_IO_HPP_

#include <string>
#include <variant>

#include "ptincl/geometry/types.hpp"

namespace ptincl::geometry {

// JSON input files:
//   {"point": [x, y]}
//   {"star": {"vertices": [[x, y], ...], "kernel": [s, t]}}
//   {"polygon": {"rings": [{"vertices": [[x, y], ...],
//                           "role": "outer" | "hole"}, ...]}}
// Coordinates must be JSON integers; floats are rejected with
// Error(kValidation).
using InputShape = std::variant<Point, StarPolygon, GeneralPolygon>;

InputShape ParseInput(const std::string& text);
InputShape LoadInputFile(const std::string& path);

std::string ToJson(const Point& p);
std::string ToJson(const StarPolygon& star);
std::string ToJson(const GeneralPolygon& poly);

}  // namespace ptincl::geometry

#endif  // PTINCL_GEOMETRY_IO_HPP_
