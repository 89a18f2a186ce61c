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

// Acceptance run. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <any>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "oracles.hpp"
#include "ptincl/cli/commands.hpp"
#include "ptincl/crypto/commutative.hpp"
#include "ptincl/crypto/encoding.hpp"
#include "ptincl/crypto/paillier.hpp"
#include "ptincl/error.hpp"
#include "ptincl/geometry/general.hpp"
#include "ptincl/geometry/generate.hpp"
#include "ptincl/protocols/p42.hpp"
#include "ptincl/protocols/p51.hpp"
#include "ptincl/protocols/runner.hpp"
#include "ptincl/subprotocols/millionaire.hpp"
#include "ptincl/subprotocols/scalar_product.hpp"
#include "ptincl/transport/channel.hpp"

namespace {

using namespace ptincl;
using crypto::AdditiveKeyPair;
using crypto::BigInt;
using crypto::Rng;
using crypto::Seed;
using geometry::GeneralPolygon;
using geometry::Point;
using geometry::StarPolygon;
using protocols::LocalRun;
using protocols::ProtocolId;
using protocols::SessionConfig;
using Clock = std::chrono::steady_clock;

// Pinned parameters and tolerances.
constexpr unsigned kKeyBits = 512;
constexpr size_t kStarCount = 500;
constexpr size_t kMinN = 4;
constexpr size_t kMaxN = 64;
constexpr int64_t kCoordLimit = 10000;
constexpr double kP41BudgetSeconds = 600.0;
constexpr size_t kRepairedRoundLimit = 8;
constexpr size_t kGeneralCount = 200;
constexpr size_t kMinWithHoles = 50;
constexpr size_t kMinMultiComponent = 50;
constexpr double kChiTolerance = 1e-6;
constexpr size_t kCrossSumPairs = 200;
constexpr double kCrossSumTolerance = 1e-6;
constexpr size_t kCryptoCases = 1000;
constexpr double kCryptoBudgetSeconds = 60.0;
constexpr int64_t kMillRange = 16;
constexpr size_t kScalarVectors = 200;
constexpr size_t kScalarMaxLength = 16;
constexpr double kLinearFitTolerance = 0.25;
constexpr size_t kSizeAuditPairs = 40;
constexpr size_t kUniformityRuns = 1000;
constexpr size_t kUniformityN = 10;
constexpr double kUniformityAlpha = 0.01;
constexpr size_t kTransportInstances = 20;

int failures = 0;

void Report(int id, const std::string& title, bool pass,
            const std::string& detail) {
  if (!pass) ++failures;
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " "
            << title << " (" << detail << ")" << std::endl;
}

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

size_t CeilLog2(size_t n) {
  size_t k = 0;
  while ((size_t{1} << k) < n) ++k;
  return k;
}

struct Keys {
  std::shared_ptr<const AdditiveKeyPair> alice;
  std::shared_ptr<const AdditiveKeyPair> bob;
};

const Keys& SharedKeys() {
  static const Keys keys = [] {
    Rng rng(Seed::FromU64(2026).Derive("acceptance-keys"));
    Keys k;
    k.alice = std::make_shared<const AdditiveKeyPair>(
        AdditiveKeyPair::Generate(kKeyBits, rng));
    k.bob = std::make_shared<const AdditiveKeyPair>(
        AdditiveKeyPair::Generate(kKeyBits, rng));
    return k;
  }();
  return keys;
}

SessionConfig Config(ProtocolId id, uint64_t seed) {
  SessionConfig c = SessionConfig::FromMasterSeed(id, seed);
  c.additive_bits = kKeyBits;
  c.alice_key = SharedKeys().alice;
  c.bob_key = SharedKeys().bob;
  return c;
}

int64_t MaxAbs(const std::vector<Point>& pts) {
  int64_t m = 0;
  for (const Point& p : pts) m = std::max({m, std::abs(p.x), std::abs(p.y)});
  return m;
}

// ---- star suite --------------------------------------------------------

struct StarCase {
  StarPolygon star;
  std::vector<Point> queries;
};

Point Sample(std::mt19937_64& gen, int64_t lo, int64_t hi) {
  std::uniform_int_distribution<int64_t> d(lo, hi);
  return {d(gen), d(gen)};
}

// Interior, exterior, edge midpoint and near-vertex points.
std::vector<Point> FourQueries(const StarPolygon& star, std::mt19937_64& gen) {
  const auto& v = star.vertices;
  const size_t n = v.size();
  std::uniform_int_distribution<size_t> pick(0, n - 1);
  std::uniform_int_distribution<int64_t> jitter(-40, 40);
  std::uniform_int_distribution<int64_t> unit(-1, 1);

  Point inside = star.kernel;
  for (int t = 0; t < 100; ++t) {
    const Point p{star.kernel.x + jitter(gen), star.kernel.y + jitter(gen)};
    if (testing::EvenOdd(v, p) == testing::Where::kIn) {
      inside = p;
      break;
    }
  }
  Point outside{kCoordLimit, kCoordLimit};
  for (int t = 0; t < 1000; ++t) {
    const Point p = Sample(gen, -kCoordLimit, kCoordLimit);
    if (testing::EvenOdd(v, p) == testing::Where::kOut) {
      outside = p;
      break;
    }
  }
  const size_t e = pick(gen);
  const Point a = v[e], b = v[(e + 1) % n];
  const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
  const Point w = v[pick(gen)];
  Point near{w.x + unit(gen), w.y + unit(gen)};
  if (near.x == w.x && near.y == w.y) near.x += 1;
  return {inside, outside, mid, near};
}

const std::vector<StarCase>& StarSuite() {
  static const std::vector<StarCase> suite = [] {
    std::vector<StarCase> out;
    std::mt19937_64 gen(500);
    std::uniform_int_distribution<size_t> size(kMinN, kMaxN);
    for (size_t i = 0; i < kStarCount; ++i) {
      geometry::StarGenOptions opt;
      opt.min_radius = 100;
      opt.max_radius = 2300;
      opt.kernel_range = 100;
      StarCase c;
      c.star = testing::Doubled(geometry::GenerateStar(1000 + i, size(gen), opt));
      c.queries = FourQueries(c.star, gen);
      out.push_back(std::move(c));
    }
    return out;
  }();
  return suite;
}

struct SuiteStats {
  size_t runs = 0;
  size_t agree = 0;
  size_t both_agree = 0;
  size_t bound_violations = 0;
  size_t errors = 0;
  size_t max_coord = 0;
  size_t worst_metric = 0;
  double seconds = 0;
  std::string first_problem;
};

SuiteStats RunStarSuite(ProtocolId id) {
  SuiteStats s;
  const auto start = Clock::now();
  uint64_t seed = 0;
  for (const StarCase& c : StarSuite()) {
    const size_t n = c.star.vertices.size();
    s.max_coord = std::max<size_t>(s.max_coord, MaxAbs(c.star.vertices));
    for (const Point& m : c.queries) {
      s.max_coord = std::max<size_t>(s.max_coord, MaxAbs({m}));
      ++s.runs;
      const bool want =
          testing::Covered(testing::EvenOdd(c.star.vertices, m));
      try {
        const LocalRun r = RunLocal(Config(id, ++seed), m, c.star);
        if (r.alice.inside == want) ++s.agree;
        if (r.alice.inside == want && r.bob.inside == want) ++s.both_agree;
        size_t metric = 0;
        size_t limit = 0;
        if (id == ProtocolId::kP42Faithful) {
          metric = r.alice.diagnostics.probes.value_or(SIZE_MAX);
          limit = CeilLog2(n) + 1;
        } else if (id == ProtocolId::kP42Repaired) {
          metric = r.transcript.Rounds();
          limit = kRepairedRoundLimit;
        }
        s.worst_metric = std::max(s.worst_metric, metric);
        if (metric > limit && id != ProtocolId::kP41) {
          ++s.bound_violations;
          if (s.first_problem.empty()) {
            s.first_problem = "n=" + std::to_string(n) + " metric " +
                              std::to_string(metric);
          }
        }
        if (r.alice.inside != want && s.first_problem.empty()) {
          s.first_problem = "disagreement at n=" + std::to_string(n) + " m=(" +
                            std::to_string(m.x) + "," + std::to_string(m.y) +
                            ")";
        }
      } catch (const std::exception& e) {
        ++s.errors;
        if (s.first_problem.empty()) s.first_problem = e.what();
      }
    }
  }
  s.seconds = Seconds(start);
  return s;
}

std::string SuiteDetail(const SuiteStats& s) {
  std::ostringstream o;
  o << s.agree << "/" << s.runs << " agree, " << s.errors << " errors, max |coord| "
    << s.max_coord;
  o.precision(1);
  o << std::fixed << ", " << s.seconds << " s";
  if (!s.first_problem.empty()) o << ", first problem: " << s.first_problem;
  return o.str();
}

void Criterion1() {
  const SuiteStats s = RunStarSuite(ProtocolId::kP41);
  const bool pass = s.runs == kStarCount * 4 && s.both_agree == s.runs &&
                    s.errors == 0 && s.max_coord <= kCoordLimit &&
                    s.seconds < kP41BudgetSeconds;
  Report(1, "oracle equivalence p41", pass, SuiteDetail(s));
}

void Criterion2() {
  const SuiteStats f = RunStarSuite(ProtocolId::kP42Faithful);
  const SuiteStats r = RunStarSuite(ProtocolId::kP42Repaired);
  const bool pass = f.runs == kStarCount * 4 && f.both_agree == f.runs &&
                    f.errors == 0 && f.bound_violations == 0 &&
                    r.runs == kStarCount * 4 && r.both_agree == r.runs &&
                    r.errors == 0 && r.bound_violations == 0;
  Report(2, "oracle equivalence p42 faithful and repaired", pass,
         "faithful: " + SuiteDetail(f) + ", probe bound violations " +
             std::to_string(f.bound_violations) + "; repaired: " +
             SuiteDetail(r) + ", max rounds " + std::to_string(r.worst_metric));
}

// ---- general polygons ---------------------------------------------------

GeneralPolygon MakeGeneral(uint64_t seed, size_t i) {
  geometry::NestedSpec spec;
  switch (i % 4) {
    case 0:
      spec.holes_per_component = 1 + i % 3 / 2;
      break;
    case 1:
      spec.components = 2 + i % 2;
      break;
    case 2:
      spec.components = 2;
      spec.holes_per_component = 1;
      break;
    default:
      spec.holes_per_component = (i / 4) % 2;
      spec.island_in_hole = spec.holes_per_component == 1;
      break;
  }
  return geometry::GenerateNested(seed, spec);
}

std::pair<Point, Point> Bounds(const GeneralPolygon& poly) {
  Point lo{INT64_MAX, INT64_MAX}, hi{INT64_MIN, INT64_MIN};
  for (const auto& r : poly.rings) {
    for (const Point& p : r.vertices) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
  }
  return {lo, hi};
}

// Point off every edge line, inside (want_in) or outside when one is found.
Point OffRayPoint(const GeneralPolygon& poly, bool want_in,
                  std::mt19937_64& gen) {
  const auto rings = testing::RingsOf(poly);
  const auto [lo, hi] = Bounds(poly);
  const int64_t pad = (hi.x - lo.x) / 10 + 1;
  Point fallback{hi.x + pad, hi.y + pad + 7};
  bool have_fallback = false;
  for (int t = 0; t < 5000; ++t) {
    const Point p{std::uniform_int_distribution<int64_t>(lo.x - pad, hi.x + pad)(gen),
                  std::uniform_int_distribution<int64_t>(lo.y - pad, hi.y + pad)(gen)};
    if (testing::OnEdgeLine(rings, p)) continue;
    if (testing::Covered(testing::EvenOdd(rings, p)) == want_in) return p;
    if (!have_fallback) {
      fallback = p;
      have_fallback = true;
    }
  }
  return fallback;
}

void Criterion3() {
  std::mt19937_64 gen(300);
  size_t with_holes = 0, multi = 0, runs = 0, agree = 0, chi_ok = 0, errors = 0;
  size_t skipped_on_ray = 0;
  double worst_chi = 0;
  std::string first_problem;
  for (size_t i = 0; i < kGeneralCount; ++i) {
    const GeneralPolygon poly = MakeGeneral(3000 + i, i);
    size_t holes = 0, outers = 0;
    for (const auto& r : poly.rings) {
      (r.role == geometry::RingRole::kHole ? holes : outers)++;
    }
    if (holes > 0) ++with_holes;
    if (outers >= 2) ++multi;
    const auto rings = testing::RingsOf(poly);
    for (bool want_in : {true, false}) {
      const Point m = OffRayPoint(poly, want_in, gen);
      if (testing::OnEdgeLine(rings, m)) {
        ++skipped_on_ray;
        continue;
      }
      ++runs;
      const bool want = testing::Covered(testing::EvenOdd(rings, m));
      try {
        const LocalRun r = RunLocal(Config(ProtocolId::kP51, 7000 + 2 * i + want_in),
                                    m, poly);
        if (r.alice.inside == want && r.bob.inside == want) {
          ++agree;
        } else if (first_problem.empty()) {
          first_problem = "disagreement on polygon " + std::to_string(i);
        }
        const double chi = r.bob.diagnostics.chi.value_or(NAN);
        const double rounded = std::round(chi);
        const double dev = std::fabs(chi - rounded);
        worst_chi = std::max(worst_chi, std::isnan(dev) ? 1.0 : dev);
        if (dev < kChiTolerance && (rounded == 0.0 || rounded == 1.0)) ++chi_ok;
      } catch (const std::exception& e) {
        ++errors;
        if (first_problem.empty()) first_problem = e.what();
      }
    }
  }
  std::ostringstream d;
  d << agree << "/" << runs << " agree, chi ok " << chi_ok << "/" << runs
    << ", worst |chi - round(chi)| " << worst_chi << ", polygons with holes "
    << with_holes << ", with 2+ components " << multi << ", errors " << errors;
  if (skipped_on_ray) d << ", no off-ray point for " << skipped_on_ray;
  if (!first_problem.empty()) d << ", first problem: " << first_problem;
  const bool pass = runs > 0 && skipped_on_ray == 0 && agree == runs &&
                    chi_ok == runs && errors == 0 &&
                    with_holes >= kMinWithHoles && multi >= kMinMultiComponent;
  Report(3, "oracle equivalence p51 on general polygons", pass, d.str());
}

// ---- characteristic sum -------------------------------------------------

void Criterion4() {
  std::mt19937_64 gen(400);
  size_t ok = 0, errors = 0;
  double worst = 0;
  for (size_t i = 0; i < kCrossSumPairs; ++i) {
    GeneralPolygon poly;
    if (i % 5 == 4) {
      poly = geometry::ToGeneral(geometry::GenerateStar(4000 + i, 4 + i % 40));
    } else {
      poly = MakeGeneral(4000 + i, i);
    }
    const Point m = OffRayPoint(poly, i % 2 == 0, gen);
    const double want =
        testing::Covered(testing::EvenOdd(testing::RingsOf(poly), m)) ? 1 : 0;
    try {
      const double got = geometry::CrossFunctionSum(poly, m);
      worst = std::max(worst, std::fabs(got - want));
      if (std::fabs(got - want) < kCrossSumTolerance) ++ok;
    } catch (const std::exception&) {
      ++errors;
    }
  }

  // Square centred on the origin, queried at its centre.
  const GeneralPolygon square{{geometry::Ring{
      {{-10, -10}, {10, -10}, {10, 10}, {-10, 10}}, geometry::RingRole::kOuter}}};
  double uv = 0, theta = 0;
  for (const auto& info : geometry::VertexAngles(square)) {
    const int v = info.convex ? 1 : -1;
    if (geometry::ClassifyWedge(info, {0, 0}) == geometry::WedgeClass::kInner) {
      uv += 0.5 * v;
    }
    const double frac = info.theta / (2 * M_PI);
    theta += info.convex ? -frac : 1.0 - frac;
  }
  const double chi = uv + theta;
  const bool square_ok = std::fabs(uv - 2) < kCrossSumTolerance &&
                         std::fabs(theta + 1) < kCrossSumTolerance &&
                         std::fabs(chi - 1) < kCrossSumTolerance &&
                         std::fabs(geometry::CrossFunctionSum(square, {0, 0}) - 1) <
                             kCrossSumTolerance;
  std::ostringstream d;
  d << ok << "/" << kCrossSumPairs << " within " << kCrossSumTolerance
    << ", worst deviation " << worst << ", errors " << errors
    << ", square centre U.V=" << uv << " theta=" << theta << " chi=" << chi;
  Report(4, "cross function sum matches even-odd", ok == kCrossSumPairs &&
                                                        errors == 0 && square_ok,
         d.str());
}

// ---- crypto ---------------------------------------------------------------

void Criterion5() {
  const auto start = Clock::now();
  Rng rng(Seed::FromU64(5).Derive("crypto-properties"));
  size_t add_fail = 0, mul_fail = 0, enc_fail = 0, comm_fail = 0, mult_fail = 0;
  std::vector<AdditiveKeyPair> keys;
  for (int k = 0; k < 10; ++k) keys.push_back(AdditiveKeyPair::Generate(kKeyBits, rng));
  const auto group = crypto::CommutativeGroup::Setup(kKeyBits, 5);
  const BigInt& p = group->p();
  for (size_t i = 0; i < kCryptoCases; ++i) {
    const AdditiveKeyPair& key = keys[i % keys.size()];
    const auto& pk = key.public_key();
    const unsigned half = crypto::kDefaultPlaintextBoundBits - 1;
    const BigInt a = rng.SignedBits(half), b = rng.SignedBits(half);
    if (key.Decrypt(pk.Add(pk.Encrypt(a, rng), pk.Encrypt(b, rng))) != a + b) {
      ++add_fail;
    }
    const BigInt small = rng.SignedBits(56), k = rng.SignedBits(56);
    if (key.Decrypt(pk.ScalarMul(pk.Encrypt(small, rng), k)) != small * k) {
      ++mul_fail;
    }
    const BigInt x = rng.SignedBits(crypto::kDefaultPlaintextBoundBits - 1);
    const crypto::SignedEncoding& enc = pk.encoding();
    if (enc.Decode(enc.Encode(x)) != x ||
        crypto::DecodeSigned(crypto::EncodeSigned(x, pk.n()), pk.n()) != x ||
        key.Decrypt(key.Encrypt(x, rng)) != x) {
      ++enc_fail;
    }
    const auto ka = crypto::CommutativeKey::Generate(group, rng);
    const auto kb = crypto::CommutativeKey::Generate(group, rng);
    const BigInt u = rng.InRange(1, p - 1), w = rng.InRange(1, p - 1);
    const BigInt ab = ka.Layer(kb.Layer(u));
    if (ab != kb.Layer(ka.Layer(u)) || ka.Unlayer(kb.Unlayer(ab)) != u) {
      ++comm_fail;
    }
    BigInt uw = u * w;
    mpz_mod(uw.get_mpz_t(), uw.get_mpz_t(), p.get_mpz_t());
    BigInt prod = ka.Layer(u) * ka.Layer(w);
    mpz_mod(prod.get_mpz_t(), prod.get_mpz_t(), p.get_mpz_t());
    if (prod != ka.Layer(uw) || ka.Multiply(ka.Layer(u), ka.Layer(w)) != prod) {
      ++mult_fail;
    }
  }
  const double secs = Seconds(start);
  std::ostringstream d;
  d << kCryptoCases << " cases each; failures: additive " << add_fail
    << ", scalar " << mul_fail << ", signed encoding " << enc_fail
    << ", commutativity " << comm_fail << ", multiplicativity " << mult_fail;
  d.precision(1);
  d << std::fixed << "; " << secs << " s";
  Report(5, "crypto property suites", add_fail + mul_fail + enc_fail +
                                             comm_fail + mult_fail ==
                                         0 && secs < kCryptoBudgetSeconds,
         d.str());
}

// ---- millionaire and scalar product ---------------------------------------

void Criterion6() {
  Rng rng(Seed::FromU64(6).Derive("subprotocols"));
  const AdditiveKeyPair& key = *SharedKeys().alice;
  const subprotocols::BlindingParams params;
  size_t pairs = 0, mill_ok = 0;
  for (int64_t x = -kMillRange; x <= kMillRange; ++x) {
    for (int64_t y = -kMillRange; y <= kMillRange; ++y) {
      ++pairs;
      const auto req = subprotocols::MillRequest(key, BigInt(long(x)), params, rng);
      const auto rep = subprotocols::MillReply(key.public_key(), req,
                                               BigInt(long(y)), params, rng);
      const int want = (x > y) - (x < y);
      if (subprotocols::MillFinish(key, rep) == want) ++mill_ok;
    }
  }
  size_t sp_ok = 0;
  const BigInt x_bound = crypto::PowerOfTwo(20);
  for (size_t t = 0; t < kScalarVectors; ++t) {
    const size_t len = 1 + rng.Uniform(kScalarMaxLength);
    std::vector<BigInt> x(len), y(len);
    BigInt dot = 0;
    for (size_t i = 0; i < len; ++i) {
      x[i] = rng.InRange(-x_bound, x_bound);
      y[i] = rng.SignedBits(20);
      dot += x[i] * y[i];
    }
    const BigInt v = rng.SignedBits(40);
    const auto req = subprotocols::SpRequest(key, x, rng);
    const auto rep =
        subprotocols::SpReply(key.public_key(), req, y, v, x_bound, rng);
    if (subprotocols::SpFinish(key, rep) == dot + v) ++sp_ok;
  }
  std::ostringstream d;
  d << "millionaire " << mill_ok << "/" << pairs << ", scalar product " << sp_ok
    << "/" << kScalarVectors;
  Report(6, "millionaire grid and scalar product",
         pairs == 1089 && mill_ok == pairs && sp_ok == kScalarVectors, d.str());
}

// ---- bench trends ---------------------------------------------------------

struct CsvRow {
  double n = 0, rounds = 0, max_probes = 0;
  bool ok = false;
};

std::vector<CsvRow> ParseCsv(const std::string& text) {
  std::vector<CsvRow> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 8) continue;
    rows.push_back({std::stod(f[0]), std::stod(f[1]), std::stod(f[5]),
                    f[7] == "true"});
  }
  return rows;
}

std::string Bench(const std::string& protocol, std::vector<size_t> sizes,
                  size_t trials, const std::string& file, int* rc) {
  cli::BenchOptions b;
  b.protocol = protocol;
  b.seed = 7;
  b.key_bits = kKeyBits;
  b.sizes = std::move(sizes);
  b.trials = trials;
  std::ostringstream out, err;
  *rc = cli::CmdBench(b, out, err);
  std::ofstream(file) << out.str();
  std::cout << "# " << file << "\n" << out.str();
  if (!err.str().empty()) std::cout << "# stderr: " << err.str();
  return out.str();
}

void Criterion7() {
  int rc41 = 0, rc42 = 0;
  const auto p41 = ParseCsv(Bench("p41", {8, 16, 32, 64}, 2, "bench_p41.csv", &rc41));
  const auto p42 = ParseCsv(
      Bench("p42", {8, 16, 32, 64, 128, 256, 512, 1024}, 3, "bench_p42.csv", &rc42));

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : p41) {
    sx += r.n;
    sy += r.rounds;
    sxx += r.n * r.n;
    sxy += r.n * r.rounds;
  }
  const double k = static_cast<double>(p41.size());
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const double icept = (sy - slope * sx) / k;
  double worst_rel = 0;
  for (const auto& r : p41) {
    const double fit = slope * r.n + icept;
    worst_rel = std::max(worst_rel, std::fabs(r.rounds - fit) / fit);
  }
  bool log_ok = p42.size() == 8;
  std::string probes;
  for (const auto& r : p42) {
    const double limit = CeilLog2(static_cast<size_t>(r.n)) + 1;
    log_ok = log_ok && r.max_probes <= limit && r.ok;
    probes += (probes.empty() ? "" : " ") + std::to_string(int(r.n)) + ":" +
              std::to_string(int(r.max_probes));
  }
  std::ostringstream d;
  d << "p41 fit rounds = " << slope << " n + " << icept << ", worst deviation "
    << 100 * worst_rel << "%, p42 max probes " << probes;
  Report(7, "round complexity trends", p41.size() == 4 && rc41 == 0 &&
                                           rc42 == 0 &&
                                           worst_rel <= kLinearFitTolerance &&
                                           log_ok,
         d.str());
}

// ---- obliviousness --------------------------------------------------------

std::vector<std::pair<int, uint32_t>> Sizes(const transport::Transcript& t) {
  std::vector<std::pair<int, uint32_t>> out;
  for (const auto& r : t.records()) {
    out.emplace_back(static_cast<int>(r.direction), r.length);
  }
  return out;
}

double ChiSquarePValue(const std::vector<size_t>& counts) {
  size_t total = 0;
  for (size_t c : counts) total += c;
  const double expect = static_cast<double>(total) / counts.size();
  double stat = 0;
  for (size_t c : counts) stat += (c - expect) * (c - expect) / expect;
  boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

void Criterion8() {
  size_t same = 0, compared = 0;
  std::mt19937_64 gen(800);
  for (ProtocolId id : {ProtocolId::kP42Faithful, ProtocolId::kP42Repaired}) {
    for (size_t i = 0; i < kSizeAuditPairs; ++i) {
      const StarCase& c = StarSuite()[i * 7 % kStarCount];
      const LocalRun a = RunLocal(Config(id, 900 + i), c.queries[0], c.star);
      const LocalRun b = RunLocal(Config(id, 900 + i), c.queries[1], c.star);
      ++compared;
      if (Sizes(a.transcript) == Sizes(b.transcript)) ++same;
    }
  }

  const StarPolygon star = geometry::GenerateStar(88, kUniformityN);
  std::vector<size_t> rotated(kUniformityN), original(kUniformityN);
  std::uniform_int_distribution<int64_t> far(-9000, 9000);
  for (size_t i = 0; i < kUniformityRuns; ++i) {
    const Point m = i % 2 ? star.kernel : Point{far(gen), far(gen)};
    const LocalRun r = RunLocal(Config(ProtocolId::kP42Faithful, 50000 + i), m,
                                star);
    const auto& bob = std::any_cast<const protocols::P42FaithfulBobState&>(r.bob.state);
    const auto& alice =
        std::any_cast<const protocols::P42FaithfulAliceState&>(r.alice.state);
    const size_t k = bob.probes.front().rotated_index;
    ++rotated[k];
    ++original[(k + alice.rotation) % kUniformityN];
  }
  const double p_rot = ChiSquarePValue(rotated);
  const double p_orig = ChiSquarePValue(original);
  std::ostringstream d;
  d << "identical size sequences " << same << "/" << compared
    << ", first probe chi-square p-value rotated " << p_rot << " original "
    << p_orig << " over " << kUniformityRuns << " runs";
  Report(8, "obliviousness audits", same == compared && p_rot >= kUniformityAlpha &&
                                        p_orig >= kUniformityAlpha,
         d.str());
}

// ---- transport invariance -------------------------------------------------

struct TcpRun {
  protocols::InclusionResult alice, bob;
  transport::Transcript alice_view;
};

TcpRun RunTcp(const SessionConfig& c, Point m, const protocols::BobInput& poly) {
  transport::TcpListener listener(transport::ParseHostPort("127.0.0.1:0"));
  TcpRun run;
  std::exception_ptr bob_error;
  std::thread bob([&] {
    try {
      auto ch = listener.Accept();
      run.bob = protocols::RunBob(*ch, c, poly);
    } catch (...) {
      bob_error = std::current_exception();
    }
  });
  std::exception_ptr alice_error;
  try {
    auto ch = transport::TcpConnect(
        transport::ParseHostPort("127.0.0.1:" + std::to_string(listener.port())));
    run.alice = protocols::RunAlice(*ch, c, m, &run.alice_view);
  } catch (...) {
    alice_error = std::current_exception();
  }
  bob.join();
  if (alice_error) std::rethrow_exception(alice_error);
  if (bob_error) std::rethrow_exception(bob_error);
  return run;
}

void Criterion9() {
  std::mt19937_64 gen(900);
  size_t runs = 0, same = 0, errors = 0;
  std::string first_problem;
  for (ProtocolId id : {ProtocolId::kP41, ProtocolId::kP42Faithful,
                        ProtocolId::kP42Repaired, ProtocolId::kP51}) {
    for (size_t i = 0; i < kTransportInstances; ++i) {
      protocols::BobInput poly;
      Point m;
      if (id == ProtocolId::kP51) {
        const GeneralPolygon g = MakeGeneral(9000 + i, i);
        m = OffRayPoint(g, i % 2 == 0, gen);
        poly = g;
      } else {
        const StarCase& c = StarSuite()[(i * 13 + static_cast<size_t>(id)) % kStarCount];
        m = c.queries[i % 4];
        poly = c.star;
      }
      ++runs;
      try {
        const SessionConfig c = Config(id, 99000 + 100 * static_cast<int>(id) + i);
        const LocalRun local = RunLocal(c, m, poly);
        const TcpRun tcp = RunTcp(c, m, poly);
        if (local.alice.inside == tcp.alice.inside &&
            local.bob.inside == tcp.bob.inside &&
            local.transcript.SameFrames(tcp.alice_view)) {
          ++same;
        } else if (first_problem.empty()) {
          first_problem = std::string(protocols::ProtocolName(id)) + " instance " +
                          std::to_string(i);
        }
      } catch (const std::exception& e) {
        ++errors;
        if (first_problem.empty()) first_problem = e.what();
      }
    }
  }
  std::ostringstream d;
  d << same << "/" << runs << " identical results and frames, errors " << errors;
  if (!first_problem.empty()) d << ", first problem: " << first_problem;
  Report(9, "transport invariance", same == runs && errors == 0, d.str());
}

void Guard(int id, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    Report(id, "aborted", false, e.what());
  }
}

}  // namespace

int main() {
  Guard(1, Criterion1);
  Guard(2, Criterion2);
  Guard(3, Criterion3);
  Guard(4, Criterion4);
  Guard(5, Criterion5);
  Guard(6, Criterion6);
  Guard(7, Criterion7);
  Guard(8, Criterion8);
  Guard(9, Criterion9);
  std::cout << (failures == 0 ? "all criteria passed" : "some criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
