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

#include "ptincl/geometry/general.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <utility>

#include "ptincl/error.hpp"
#include "ptincl/geometry/predicates.hpp"

namespace ptincl::geometry {

namespace {

std::string RingTag(size_t r, size_t i) {
  return "ring " + std::to_string(r) + " vertex " + std::to_string(i);
}

bool RingSelfIntersects(const std::vector<Point>& v, size_t* where) {
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      const Point a = v[i], b = v[(i + 1) % n];
      const Point c = v[j], d = v[(j + 1) % n];
      if (adjacent) {
        // Adjacent edges may only share their common endpoint.
        const Point a_far = (j == i + 1) ? a : b;
        const Point c_far = (j == i + 1) ? d : c;
        if (OnSegment(c, d, a_far) || OnSegment(a, b, c_far)) {
          *where = i;
          return true;
        }
        continue;
      }
      if (SegmentsIntersect(a, b, c, d)) {
        *where = i;
        return true;
      }
    }
  }
  return false;
}

bool RingsIntersect(const std::vector<Point>& u, const std::vector<Point>& v) {
  for (size_t i = 0; i < u.size(); ++i) {
    for (size_t j = 0; j < v.size(); ++j) {
      if (SegmentsIntersect(u[i], u[(i + 1) % u.size()], v[j],
                            v[(j + 1) % v.size()])) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<PolygonViolation> ValidatePolygon(const GeneralPolygon& poly,
                                                int64_t coord_bound) {
  if (poly.rings.empty()) {
    return PolygonViolation{PolygonViolationKind::kNoRings, 0, 0,
                            "polygon has no rings"};
  }
  for (size_t r = 0; r < poly.rings.size(); ++r) {
    const auto& v = poly.rings[r].vertices;
    if (v.size() < 3) {
      return PolygonViolation{PolygonViolationKind::kTooFewVertices, r, 0,
                              "ring " + std::to_string(r) +
                                  " has fewer than 3 vertices"};
    }
    std::set<std::pair<int64_t, int64_t>> seen;
    for (size_t i = 0; i < v.size(); ++i) {
      if (!WithinBound(v[i], coord_bound)) {
        return PolygonViolation{PolygonViolationKind::kCoordinateOverflow, r,
                                i, RingTag(r, i) + " exceeds the bound"};
      }
      if (!seen.insert({v[i].x, v[i].y}).second) {
        return PolygonViolation{PolygonViolationKind::kDuplicateVertex, r, i,
                                RingTag(r, i) + " is repeated"};
      }
    }
    for (size_t i = 0; i < v.size(); ++i) {
      const Point prev = v[(i + v.size() - 1) % v.size()];
      const Point next = v[(i + 1) % v.size()];
      if (SignedArea2(prev, v[i], next) == 0) {
        return PolygonViolation{PolygonViolationKind::kDegenerateVertex, r, i,
                                RingTag(r, i) + " has collinear edges"};
      }
    }
    size_t where = 0;
    if (RingSelfIntersects(v, &where)) {
      return PolygonViolation{PolygonViolationKind::kSelfIntersection, r,
                              where,
                              "ring " + std::to_string(r) +
                                  " intersects itself near edge " +
                                  std::to_string(where)};
    }
  }
  for (size_t r = 0; r < poly.rings.size(); ++r) {
    for (size_t s = r + 1; s < poly.rings.size(); ++s) {
      if (RingsIntersect(poly.rings[r].vertices, poly.rings[s].vertices)) {
        return PolygonViolation{PolygonViolationKind::kRingsCross, r, 0,
                                "rings " + std::to_string(r) + " and " +
                                    std::to_string(s) + " touch or cross"};
      }
    }
  }
  for (size_t r = 0; r < poly.rings.size(); ++r) {
    const Ring& ring = poly.rings[r];
    const int64_t area = RingArea2(ring.vertices);
    const bool ccw = area > 0;
    if (ccw != (ring.role == RingRole::kOuter)) {
      return PolygonViolation{PolygonViolationKind::kWrongOrientation, r, 0,
                              "ring " + std::to_string(r) +
                                  (ring.role == RingRole::kOuter
                                       ? " is an outer ring but clockwise"
                                       : " is a hole but counterclockwise")};
    }
    size_t depth = 0;
    for (size_t s = 0; s < poly.rings.size(); ++s) {
      if (s == r) continue;
      if (RingLocation(poly.rings[s].vertices, ring.vertices.front()) ==
          Location::kInside) {
        ++depth;
      }
    }
    const bool should_be_outer = depth % 2 == 0;
    if (should_be_outer != (ring.role == RingRole::kOuter)) {
      return PolygonViolation{PolygonViolationKind::kBadNesting, r, 0,
                              "ring " + std::to_string(r) +
                                  " role does not match its nesting depth " +
                                  std::to_string(depth)};
    }
  }
  return std::nullopt;
}

VertexAngleInfo IncludedAngle(const Ring& ring, size_t i) {
  const auto& v = ring.vertices;
  const size_t n = v.size();
  VertexAngleInfo info;
  info.index = i;
  info.vertex = v[i];
  info.to_prev = v[(i + n - 1) % n] - v[i];
  info.to_next = v[(i + 1) % n] - v[i];
  const Point in = -info.to_prev;
  const Point out = info.to_next;
  if ((in.x == 0 && in.y == 0) || (out.x == 0 && out.y == 0)) {
    throw Error(ErrorCode::kDegenerateVertex,
                "zero-length edge at vertex " + std::to_string(i));
  }
  const int64_t turn = Cross(in, out);
  if (turn == 0) {
    throw Error(ErrorCode::kDegenerateVertex,
                "collinear edges at vertex " + std::to_string(i));
  }
  // With the interior on the left, the included angle is pi minus the signed
  // turn from the incoming to the outgoing edge.
  const double turn_angle =
      std::atan2(static_cast<double>(turn),
                 static_cast<double>(DotProduct(in, out)));
  info.theta = std::numbers::pi - turn_angle;
  info.convex = turn > 0;
  return info;
}

std::vector<VertexAngleInfo> VertexAngles(const GeneralPolygon& poly) {
  std::vector<VertexAngleInfo> infos;
  infos.reserve(poly.vertex_count());
  for (const Ring& ring : poly.rings) {
    for (size_t i = 0; i < ring.vertices.size(); ++i) {
      infos.push_back(IncludedAngle(ring, i));
    }
  }
  return infos;
}

bool OnVertexRays(const VertexAngleInfo& info, Point m) {
  const Point d = m - info.vertex;
  return Cross(info.to_prev, d) == 0 || Cross(d, info.to_next) == 0;
}

bool OnAnyVertexRay(const GeneralPolygon& poly, Point m) {
  for (const Ring& ring : poly.rings) {
    const size_t n = ring.vertices.size();
    for (size_t i = 0; i < n; ++i) {
      const Point v = ring.vertices[i];
      const Point next = ring.vertices[(i + 1) % n];
      if (SignedArea2(v, next, m) == 0) return true;
    }
  }
  return false;
}

WedgeClass ClassifyWedge(const VertexAngleInfo& info, Point m) {
  const Point d = m - info.vertex;
  const int64_t first = Cross(info.to_prev, d);
  const int64_t second = Cross(d, info.to_next);
  if (first == 0 || second == 0) {
    throw Error(ErrorCode::kOnRay, "point lies on a ray of vertex " +
                                       std::to_string(info.index));
  }
  // d lies in the double cone spanned by to_prev and to_next iff it is on the
  // same side of both edge lines relative to the cone.
  return (Sign(first) == Sign(second)) ? WedgeClass::kInner
                                       : WedgeClass::kOuter;
}

double CrossFunction(const VertexAngleInfo& info, Point m) {
  const bool inner = ClassifyWedge(info, m) == WedgeClass::kInner;
  const double frac = info.theta / (2.0 * std::numbers::pi);
  if (info.convex) return inner ? 0.5 - frac : -frac;
  return inner ? 0.5 - frac : 1.0 - frac;
}

double CrossFunctionSum(const GeneralPolygon& poly, Point m) {
  double sum = 0.0;
  for (const VertexAngleInfo& info : VertexAngles(poly)) {
    sum += CrossFunction(info, m);
  }
  return sum;
}

int Characteristic(const GeneralPolygon& poly, Point m, double tolerance) {
  const double sum = CrossFunctionSum(poly, m);
  const double rounded = std::round(sum);
  if (std::abs(sum - rounded) >= tolerance ||
      (rounded != 0.0 && rounded != 1.0)) {
    throw Error(ErrorCode::kConsistency,
                "cross function sum " + std::to_string(sum) +
                    " is not near 0 or 1");
  }
  return static_cast<int>(rounded);
}

Location OracleContains(const GeneralPolygon& poly, Point m) {
  bool inside = false;
  for (const Ring& ring : poly.rings) {
    const Location loc = RingLocation(ring.vertices, m);
    if (loc == Location::kBoundary) return Location::kBoundary;
    if (loc == Location::kInside) inside = !inside;
  }
  return inside ? Location::kInside : Location::kOutside;
}

Location OracleContains(const StarPolygon& star, Point m) {
  return RingLocation(star.vertices, m);
}

GeneralPolygon ToGeneral(const StarPolygon& star) {
  return GeneralPolygon{{Ring{star.vertices, RingRole::kOuter}}};
}

}  // namespace ptincl::geometry
