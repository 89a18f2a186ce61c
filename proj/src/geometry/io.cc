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

#include "ptincl/geometry/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ptincl/error.hpp"

namespace ptincl::geometry {

namespace {

using nlohmann::json;

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kValidation, "invalid input file: " + what);
}

int64_t ParseCoordinate(const json& j) {
  if (!j.is_number_integer()) Invalid("coordinates must be integers");
  return j.get<int64_t>();
}

Point ParsePoint(const json& j) {
  if (!j.is_array() || j.size() != 2) Invalid("a point is [x, y]");
  return {ParseCoordinate(j[0]), ParseCoordinate(j[1])};
}

std::vector<Point> ParseVertices(const json& j) {
  if (!j.is_array()) Invalid("vertices must be an array");
  std::vector<Point> out;
  out.reserve(j.size());
  for (const json& p : j) out.push_back(ParsePoint(p));
  return out;
}

json PointJson(const Point& p) { return json::array({p.x, p.y}); }

json VerticesJson(const std::vector<Point>& v) {
  json arr = json::array();
  for (const Point& p : v) arr.push_back(PointJson(p));
  return arr;
}

}  // namespace

InputShape ParseInput(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    Invalid(e.what());
  }
  if (!doc.is_object() || doc.size() != 1) {
    Invalid("expected exactly one of point, star, polygon");
  }
  if (doc.contains("point")) return ParsePoint(doc["point"]);
  if (doc.contains("star")) {
    const json& s = doc["star"];
    if (!s.is_object() || !s.contains("vertices") || !s.contains("kernel")) {
      Invalid("star needs vertices and kernel");
    }
    return StarPolygon{ParseVertices(s["vertices"]), ParsePoint(s["kernel"])};
  }
  if (doc.contains("polygon")) {
    const json& p = doc["polygon"];
    if (!p.is_object() || !p.contains("rings") || !p["rings"].is_array()) {
      Invalid("polygon needs a rings array");
    }
    GeneralPolygon poly;
    for (const json& r : p["rings"]) {
      if (!r.is_object() || !r.contains("vertices")) {
        Invalid("ring needs vertices");
      }
      Ring ring;
      ring.vertices = ParseVertices(r["vertices"]);
      const std::string role = r.value("role", "outer");
      if (role == "outer") {
        ring.role = RingRole::kOuter;
      } else if (role == "hole") {
        ring.role = RingRole::kHole;
      } else {
        Invalid("ring role must be outer or hole");
      }
      poly.rings.push_back(std::move(ring));
    }
    return poly;
  }
  Invalid("expected exactly one of point, star, polygon");
}

InputShape LoadInputFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseInput(buf.str());
}

std::string ToJson(const Point& p) {
  return json{{"point", PointJson(p)}}.dump();
}

std::string ToJson(const StarPolygon& star) {
  return json{{"star",
               {{"vertices", VerticesJson(star.vertices)},
                {"kernel", PointJson(star.kernel)}}}}
      .dump();
}

std::string ToJson(const GeneralPolygon& poly) {
  json rings = json::array();
  for (const Ring& r : poly.rings) {
    rings.push_back({{"vertices", VerticesJson(r.vertices)},
                     {"role", r.role == RingRole::kOuter ? "outer" : "hole"}});
  }
  return json{{"polygon", {{"rings", rings}}}}.dump();
}

}  // namespace ptincl::geometry
