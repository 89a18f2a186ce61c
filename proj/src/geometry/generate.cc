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

#include "ptincl/geometry/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "ptincl/error.hpp"
#include "ptincl/geometry/general.hpp"
#include "ptincl/geometry/predicates.hpp"
#include "ptincl/geometry/star.hpp"

namespace ptincl::geometry {

namespace {

constexpr int kMaxAttempts = 200;

// Sorted angles in [0, 2pi), one per sector of width 2pi/n, with cyclic
// gaps at most max_gap and at least 0.4 of a sector.
std::vector<double> SortedAngles(std::mt19937_64& gen, size_t n,
                                 double max_gap) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  const double spread = std::clamp(0.9 * (max_gap / step - 1.0), 0.0, 0.6);
  std::uniform_real_distribution<double> offset(0.0, step);
  std::uniform_real_distribution<double> jitter(0.0, spread * step);
  std::vector<double> angles(n);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double base = offset(gen);
    for (size_t i = 0; i < n; ++i) {
      angles[i] = std::fmod(base + static_cast<double>(i) * step + jitter(gen),
                            2.0 * std::numbers::pi);
    }
    std::sort(angles.begin(), angles.end());
    double worst = angles.front() + 2.0 * std::numbers::pi - angles.back();
    for (size_t i = 1; i < n; ++i) {
      worst = std::max(worst, angles[i] - angles[i - 1]);
    }
    if (worst <= max_gap + 1e-12) return angles;
  }
  for (size_t i = 0; i < n; ++i) angles[i] = static_cast<double>(i) * step;
  return angles;
}

std::vector<Point> StarRing(std::mt19937_64& gen, Point center, size_t n,
                            double min_radius, double max_radius,
                            double max_gap) {
  const std::vector<double> angles = SortedAngles(gen, n, max_gap);
  std::uniform_real_distribution<double> radius(min_radius, max_radius);
  std::vector<Point> ring;
  ring.reserve(n);
  for (double a : angles) {
    const double r = radius(gen);
    ring.push_back({center.x + std::llround(r * std::cos(a)),
                    center.y + std::llround(r * std::sin(a))});
  }
  return ring;
}

Ring MakeRing(std::vector<Point> ccw, RingRole role) {
  if (role == RingRole::kHole) std::reverse(ccw.begin(), ccw.end());
  return Ring{std::move(ccw), role};
}

}  // namespace

StarPolygon GenerateStar(uint64_t seed, size_t n,
                         const StarGenOptions& options) {
  if (n < 3) {
    throw Error(ErrorCode::kValidation, "star polygons need n >= 3");
  }
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int64_t> kernel(-options.kernel_range,
                                                options.kernel_range);
  // Large n needs room between neighbouring vertices.
  const double scale = std::max(1.0, static_cast<double>(n) / 32.0);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    StarPolygon star;
    star.kernel = {kernel(gen), kernel(gen)};
    star.vertices = StarRing(gen, star.kernel, n,
                             scale * static_cast<double>(options.min_radius),
                             scale * static_cast<double>(options.max_radius),
                             0.95 * std::numbers::pi);
    if (!ValidateStar(star)) return star;
  }
  throw Error(ErrorCode::kGenerationFailure,
              "no valid star polygon after bounded retries (n=" +
                  std::to_string(n) + ")");
}

GeneralPolygon GenerateNested(uint64_t seed, const NestedSpec& spec) {
  const int64_t s = spec.scale;
  if (spec.kind == NestedKind::kSquareWithHole) {
    const int64_t h = s / 2;
    GeneralPolygon poly;
    poly.rings.push_back(
        Ring{{{-s, -s}, {s, -s}, {s, s}, {-s, s}}, RingRole::kOuter});
    poly.rings.push_back(
        Ring{{{-h, -h}, {-h, h}, {h, h}, {h, -h}}, RingRole::kHole});
    return poly;
  }
  if (spec.components == 0 || spec.min_vertices < 3 ||
      spec.max_vertices < spec.min_vertices) {
    throw Error(ErrorCode::kValidation, "invalid nested polygon options");
  }

  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<size_t> count(spec.min_vertices,
                                              spec.max_vertices);
  std::uniform_int_distribution<int64_t> wobble(-s / 10, s / 10);
  const double scale = static_cast<double>(s);
  // Gaps below a quarter turn keep a disc of radius 0.7 * cos(pi/4) * scale
  // inside every outer ring, which contains all holes below.
  const double gap = 0.5 * std::numbers::pi;

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    GeneralPolygon poly;
    const double spacing = 2.4 * scale;
    const double start =
        -0.5 * spacing * static_cast<double>(spec.components - 1);
    for (size_t k = 0; k < spec.components; ++k) {
      const Point center{
          std::llround(start + spacing * static_cast<double>(k)),
          wobble(gen)};
      poly.rings.push_back(
          MakeRing(StarRing(gen, center, count(gen), 0.7 * scale, scale, gap),
                   RingRole::kOuter));
      const size_t holes = spec.holes_per_component;
      if (holes == 1) {
        poly.rings.push_back(MakeRing(
            StarRing(gen, center, count(gen), 0.2 * scale, 0.4 * scale, gap),
            RingRole::kHole));
        if (spec.island_in_hole) {
          poly.rings.push_back(MakeRing(StarRing(gen, center, count(gen),
                                                 0.05 * scale, 0.12 * scale,
                                                 gap),
                                        RingRole::kOuter));
        }
      } else if (holes > 1) {
        for (size_t h = 0; h < holes; ++h) {
          const double a = 2.0 * std::numbers::pi * static_cast<double>(h) /
                           static_cast<double>(holes);
          const Point hc{center.x + std::llround(0.25 * scale * std::cos(a)),
                         center.y + std::llround(0.25 * scale * std::sin(a))};
          const double rmax = std::min(0.12, 0.2 * std::sin(std::numbers::pi /
                                                           holes)) *
                              scale;
          poly.rings.push_back(MakeRing(
              StarRing(gen, hc, count(gen), 0.5 * rmax, rmax, gap),
              RingRole::kHole));
        }
      }
    }
    if (!ValidatePolygon(poly)) return poly;
  }
  throw Error(ErrorCode::kGenerationFailure,
              "no valid nested polygon after bounded retries");
}

std::vector<Point> GenerateConvex(uint64_t seed, size_t n, int64_t radius) {
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double r = static_cast<double>(radius);
    std::vector<Point> ring = StarRing(gen, {0, 0}, n, r, r, std::numbers::pi);
    bool ok = true;
    for (size_t i = 0; i < ring.size() && ok; ++i) {
      const Point a = ring[i];
      const Point b = ring[(i + 1) % ring.size()];
      const Point c = ring[(i + 2) % ring.size()];
      ok = SignedArea2(a, b, c) > 0;
    }
    if (ok && !ValidatePolygon(GeneralPolygon{{Ring{ring, RingRole::kOuter}}})) {
      return ring;
    }
  }
  throw Error(ErrorCode::kGenerationFailure,
              "no convex polygon after bounded retries");
}

}  // namespace ptincl::geometry
