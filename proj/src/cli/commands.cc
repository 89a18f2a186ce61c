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

#include "ptincl/cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "ptincl/crypto/key_io.hpp"
#include "ptincl/error.hpp"
#include "ptincl/geometry/general.hpp"
#include "ptincl/geometry/generate.hpp"
#include "ptincl/geometry/io.hpp"
#include "ptincl/geometry/predicates.hpp"
#include "ptincl/geometry/star.hpp"
#include "ptincl/protocols/p42.hpp"
#include "ptincl/protocols/runner.hpp"

namespace ptincl::cli {

using nlohmann::ordered_json;
using protocols::ProtocolId;

namespace {

std::optional<uint64_t> ParseU64(const std::string& s) {
  if (s.empty()) return std::nullopt;
  uint64_t v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return std::nullopt;
    const uint64_t d = static_cast<uint64_t>(ch - '0');
    if (v > (UINT64_MAX - d) / 10) return std::nullopt;
    v = v * 10 + d;
  }
  return v;
}

protocols::BobInput LoadPolygon(const std::string& path) {
  geometry::InputShape shape = geometry::LoadInputFile(path);
  if (auto* star = std::get_if<geometry::StarPolygon>(&shape)) return *star;
  if (auto* poly = std::get_if<geometry::GeneralPolygon>(&shape)) return *poly;
  throw Error(ErrorCode::kValidation, path + " holds a point, not a polygon");
}

geometry::Point LoadPoint(const std::string& path) {
  geometry::InputShape shape = geometry::LoadInputFile(path);
  if (auto* p = std::get_if<geometry::Point>(&shape)) return *p;
  throw Error(ErrorCode::kValidation, path + " does not hold a point");
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + path);
  f << text;
  if (!f) throw Error(ErrorCode::kIo, "write failed for " + path);
}

std::string ReadText(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

const char* ResultToken(bool inside) { return inside ? "inside" : "outside"; }

ordered_json DiagnosticsJson(const protocols::Diagnostics& d) {
  ordered_json j;
  j["rounds"] = d.rounds;
  j["messages"] = d.messages;
  j["bytes_alice_to_bob"] = d.bytes_alice_to_bob;
  j["bytes_bob_to_alice"] = d.bytes_bob_to_alice;
  if (d.wedge) j["wedge"] = *d.wedge;
  if (d.wedge) j["boundary"] = d.boundary;
  if (d.probes) j["probes"] = *d.probes;
  if (d.chi) j["chi"] = *d.chi;
  j["warnings"] = d.warnings;
  j["leakage"] = d.leakage;
  return j;
}

void PrintDiagnostics(const protocols::Diagnostics& d, std::ostream& out) {
  out << "rounds " << d.rounds << "\n";
  out << "messages " << d.messages << "\n";
  out << "bytes_alice_to_bob " << d.bytes_alice_to_bob << "\n";
  out << "bytes_bob_to_alice " << d.bytes_bob_to_alice << "\n";
  if (d.wedge) out << "wedge " << *d.wedge << "\n";
  if (d.probes) out << "probes " << *d.probes << "\n";
  if (d.chi) {
    std::ostringstream s;
    s.precision(12);
    s << *d.chi;
    out << "chi " << s.str() << "\n";
  }
}

// Point for benchmark trial t: alternately near the kernel and far away.
// General polygons need a point off every vertex ray.
geometry::Point BenchPoint(const geometry::StarPolygon& star, size_t t,
                           bool off_rays, std::mt19937_64& gen) {
  const geometry::GeneralPolygon poly = geometry::ToGeneral(star);
  std::uniform_int_distribution<int64_t> near(-150, 150);
  std::uniform_int_distribution<int64_t> far(-6000, 6000);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    geometry::Point m = t % 2 == 0
                            ? geometry::Point{star.kernel.x + near(gen),
                                              star.kernel.y + near(gen)}
                            : geometry::Point{far(gen), far(gen)};
    if (!off_rays || !geometry::OnAnyVertexRay(poly, m)) return m;
  }
  throw Error(ErrorCode::kGenerationFailure, "no point off the vertex rays");
}

}  // namespace

std::optional<uint64_t> SeedFromEnv() {
  const char* v = std::getenv("PTINCL_SEED");
  if (v == nullptr || *v == '\0') return std::nullopt;
  const auto parsed = ParseU64(v);
  if (!parsed) {
    throw Error(ErrorCode::kValidation,
                std::string("PTINCL_SEED is not an unsigned integer: ") + v);
  }
  return parsed;
}

uint64_t ResolveSeed(const std::optional<uint64_t>& flag) {
  if (flag) return *flag;
  if (auto env = SeedFromEnv()) return *env;
  const auto bytes = crypto::Seed::FromEntropy().bytes();
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | bytes[i];
  return v;
}

protocols::SessionConfig MakeConfig(const CommonOptions& o, uint64_t seed) {
  const auto id = protocols::ParseProtocol(o.protocol);
  if (!id) {
    throw Error(ErrorCode::kValidation,
                "unknown protocol '" + o.protocol +
                    "' (expected p41, p42, p42r or p51)");
  }
  protocols::SessionConfig c = protocols::SessionConfig::FromMasterSeed(*id, seed);
  c.additive_bits = o.key_bits;
  c.commutative_bits = o.comm_bits;
  c.public_seed = o.public_seed;
  c.blinding.blind_bound = crypto::PowerOfTwo(o.blind_bits);
  c.blinding.coord_bound = o.coord_bound;
  c.chi_tolerance = o.tolerance;
  c.Validate();
  return c;
}

int ReportError(const std::exception& e, bool json, std::ostream& err) {
  int code = 4;
  std::string name = "protocol";
  if (const auto* pe = dynamic_cast<const Error*>(&e)) {
    code = pe->from_peer() ? 4 : ExitCodeFor(pe->code());
    name = ErrorCodeName(pe->code());
  }
  if (json) {
    ordered_json j;
    j["error"] = name;
    j["message"] = e.what();
    j["exit_code"] = code;
    err << j.dump() << "\n";
  } else {
    err << "error (" << name << "): " << e.what() << "\n";
  }
  return code;
}

int CmdKeygen(const KeygenOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const uint64_t seed = ResolveSeed(o.seed);
    crypto::Rng rng(crypto::Seed::FromU64(seed).Derive("keygen"));
    const auto pair = crypto::AdditiveKeyPair::Generate(o.bits, rng);
    crypto::SaveKeyDirectory(o.out_dir, pair);
    const auto dir = std::filesystem::path(o.out_dir);
    if (o.json) {
      ordered_json j;
      j["bits"] = pair.public_key().bits();
      j["public"] = (dir / crypto::kPublicKeyFile).string();
      j["secret"] = (dir / crypto::kSecretKeyFile).string();
      out << j.dump() << "\n";
    } else {
      out << "wrote " << (dir / crypto::kSecretKeyFile).string() << " and "
          << (dir / crypto::kPublicKeyFile).string() << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    return ReportError(e, o.json, err);
  }
}

int CmdRun(const RunOptions& o, std::ostream& out, std::ostream& err) {
  try {
    if (o.role != "alice" && o.role != "bob") {
      throw Error(ErrorCode::kValidation, "--role must be alice or bob");
    }
    if (o.listen.empty() == o.connect.empty()) {
      throw Error(ErrorCode::kValidation,
                  "exactly one of --listen and --connect is required");
    }
    if (o.input.empty()) {
      throw Error(ErrorCode::kValidation,
                  o.role == "alice" ? "--point is required for alice"
                                    : "--polygon is required for bob");
    }
    protocols::SessionConfig c = MakeConfig(o, ResolveSeed(o.seed));
    const bool alice = o.role == "alice";
    if (!o.keys_dir.empty()) {
      auto key = std::make_shared<const crypto::AdditiveKeyPair>(
          crypto::LoadKeyPair(std::filesystem::path(o.keys_dir) /
                              crypto::kSecretKeyFile));
      (alice ? c.alice_key : c.bob_key) = key;
    }
    geometry::Point m{};
    protocols::BobInput polygon;
    if (alice) {
      m = LoadPoint(o.input);
    } else {
      polygon = LoadPolygon(o.input);
      protocols::ValidateBobInput(c, polygon);
    }

    std::unique_ptr<transport::Channel> channel;
    if (!o.listen.empty()) {
      transport::TcpListener listener(transport::ParseHostPort(o.listen));
      if (o.on_listening) {
        o.on_listening(listener.port());
      } else {
        err << "listening on port " << listener.port() << "\n";
      }
      channel = listener.Accept();
    } else {
      channel = transport::TcpConnect(transport::ParseHostPort(o.connect));
    }
    transport::Transcript transcript;
    const protocols::InclusionResult r =
        alice ? protocols::RunAlice(*channel, c, m, &transcript)
              : protocols::RunBob(*channel, c, polygon, &transcript);
    channel->Close();
    if (!o.transcript.empty()) WriteText(o.transcript, transcript.ToJsonLines());
    for (const auto& w : r.diagnostics.warnings) err << "warning: " << w << "\n";
    if (o.json) {
      ordered_json j;
      j["result"] = ResultToken(r.inside);
      j["inside"] = r.inside;
      j["role"] = o.role;
      j["protocol"] = protocols::ProtocolName(c.protocol);
      j["diagnostics"] = DiagnosticsJson(r.diagnostics);
      out << j.dump() << "\n";
    } else {
      out << ResultToken(r.inside) << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    return ReportError(e, o.json, err);
  }
}

int CmdSimulate(const SimulateOptions& o, std::ostream& out,
                std::ostream& err) {
  try {
    const protocols::SessionConfig c = MakeConfig(o, ResolveSeed(o.seed));
    const geometry::Point m = LoadPoint(o.point);
    const protocols::BobInput polygon = LoadPolygon(o.polygon);
    const protocols::LocalRun run = protocols::RunLocal(c, m, polygon);
    if (!o.transcript.empty()) {
      WriteText(o.transcript, run.transcript.ToJsonLines());
    }
    protocols::Diagnostics d = run.alice.diagnostics;
    if (run.bob.diagnostics.chi) d.chi = run.bob.diagnostics.chi;
    for (const auto& w : d.warnings) err << "warning: " << w << "\n";
    if (o.json) {
      ordered_json j;
      j["result"] = ResultToken(run.alice.inside);
      j["inside"] = run.alice.inside;
      j["bob_inside"] = run.bob.inside;
      j["protocol"] = protocols::ProtocolName(c.protocol);
      j["diagnostics"] = DiagnosticsJson(d);
      j["bob_leakage"] = run.bob.diagnostics.leakage;
      out << j.dump() << "\n";
    } else {
      out << ResultToken(run.alice.inside) << "\n";
      out << "protocol " << protocols::ProtocolName(c.protocol) << "\n";
      PrintDiagnostics(d, out);
    }
    return 0;
  } catch (const std::exception& e) {
    return ReportError(e, o.json, err);
  }
}

int CmdOracle(const OracleOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const protocols::BobInput polygon = LoadPolygon(o.polygon);
    const geometry::Point m = LoadPoint(o.point);
    geometry::Location loc;
    if (const auto* star = std::get_if<geometry::StarPolygon>(&polygon)) {
      if (auto v = geometry::ValidateStar(*star)) {
        throw Error(ErrorCode::kValidation,
                    std::string("invalid star polygon: ") + v->message);
      }
      loc = geometry::OracleContains(*star, m);
    } else {
      const auto& poly = std::get<geometry::GeneralPolygon>(polygon);
      if (auto v = geometry::ValidatePolygon(poly)) {
        throw Error(ErrorCode::kValidation,
                    std::string("invalid polygon: ") + v->message);
      }
      loc = geometry::OracleContains(poly, m);
    }
    if (o.json) {
      ordered_json j;
      j["result"] = geometry::LocationName(loc);
      j["inside"] = geometry::IsInside(loc);
      j["boundary"] = loc == geometry::Location::kBoundary;
      out << j.dump() << "\n";
    } else {
      out << geometry::LocationName(loc) << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    return ReportError(e, o.json, err);
  }
}

int CmdBench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const uint64_t seed = ResolveSeed(o.seed);
    protocols::SessionConfig c = MakeConfig(o, seed);
    if (o.trials == 0) throw Error(ErrorCode::kValidation, "--trials must be >= 1");
    // Reuse one additive key per party across trials.
    {
      crypto::Rng rng(crypto::Seed::FromU64(seed).Derive("bench/keys"));
      c.alice_key = std::make_shared<const crypto::AdditiveKeyPair>(
          crypto::AdditiveKeyPair::Generate(c.additive_bits, rng,
                                            c.plaintext_bound));
      if (c.protocol == ProtocolId::kP51) {
        c.bob_key = std::make_shared<const crypto::AdditiveKeyPair>(
            crypto::AdditiveKeyPair::Generate(c.additive_bits, rng,
                                              c.plaintext_bound));
      }
    }
    std::ostringstream csv;
    csv << "n,mean_rounds,mean_bytes,mean_wall_ms,mean_probes,max_probes,"
           "bound,bound_ok\n";
    bool all_ok = true;
    for (size_t n : o.sizes) {
      if (n < 3) throw Error(ErrorCode::kValidation, "bench sizes must be >= 3");
      double rounds = 0, bytes = 0, wall = 0, probes = 0;
      size_t max_probes = 0;
      size_t max_rounds = 0;
      std::mt19937_64 gen(seed ^ (n * 0x9e3779b97f4a7c15ULL));
      for (size_t t = 0; t < o.trials; ++t) {
        const geometry::StarPolygon star = geometry::GenerateStar(gen(), n);
        const geometry::Point m =
            BenchPoint(star, t, c.protocol == ProtocolId::kP51, gen);
        protocols::SessionConfig trial = c;
        trial.SetMasterSeed(gen());
        protocols::BobInput input = star;
        if (c.protocol == ProtocolId::kP51) input = geometry::ToGeneral(star);
        const auto start = std::chrono::steady_clock::now();
        const protocols::LocalRun run = protocols::RunLocal(trial, m, input);
        wall += std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
        rounds += static_cast<double>(run.transcript.Rounds());
        bytes += static_cast<double>(run.transcript.TotalBytes());
        max_rounds = std::max(max_rounds, run.transcript.Rounds());
        const size_t p = run.alice.diagnostics.probes.value_or(0);
        probes += static_cast<double>(p);
        max_probes = std::max(max_probes, p);
      }
      const double k = static_cast<double>(o.trials);
      size_t bound = 0;
      bool ok = true;
      switch (c.protocol) {
        case ProtocolId::kP41:
          bound = 4 * n + 2;
          ok = max_rounds <= bound;
          break;
        case ProtocolId::kP42Faithful:
          bound = protocols::FaithfulRayProbes(n);
          ok = max_probes <= bound;
          break;
        case ProtocolId::kP42Repaired:
          bound = 8;
          ok = max_rounds <= bound;
          break;
        case ProtocolId::kP51:
          bound = 5 * n + 4;
          ok = max_rounds <= bound;
          break;
      }
      all_ok = all_ok && ok;
      csv << n << ',' << rounds / k << ',' << bytes / k << ',' << wall / k
          << ',' << probes / k << ',' << max_probes << ',' << bound << ','
          << (ok ? "true" : "false") << "\n";
    }
    if (o.csv.empty()) {
      out << csv.str();
    } else {
      WriteText(o.csv, csv.str());
      out << "wrote " << o.csv << "\n";
    }
    if (!all_ok) {
      err << "error: a run exceeded its round or probe bound\n";
      return 4;
    }
    return 0;
  } catch (const std::exception& e) {
    return ReportError(e, o.json, err);
  }
}

int CmdAudit(const AuditOptions& o, std::ostream& out, std::ostream& err) {
  try {
    if (o.files.empty() || o.files.size() > 2) {
      throw Error(ErrorCode::kValidation, "audit takes one or two transcripts");
    }
    std::vector<transport::Transcript> ts;
    for (const auto& f : o.files) {
      ts.push_back(transport::Transcript::FromJsonLines(ReadText(f)));
    }
    ordered_json j;
    j["transcripts"] = ordered_json::array();
    for (size_t i = 0; i < ts.size(); ++i) {
      const auto& t = ts[i];
      ordered_json e;
      e["file"] = o.files[i];
      e["messages"] = t.size();
      e["rounds"] = t.Rounds();
      e["bytes_alice_to_bob"] = t.Bytes(transport::Direction::kAliceToBob);
      e["bytes_bob_to_alice"] = t.Bytes(transport::Direction::kBobToAlice);
      j["transcripts"].push_back(e);
      if (!o.json) {
        out << o.files[i] << ": messages " << t.size() << ", rounds "
            << t.Rounds() << ", bytes alice->bob "
            << e["bytes_alice_to_bob"].get<size_t>() << ", bytes bob->alice "
            << e["bytes_bob_to_alice"].get<size_t>() << "\n";
      }
    }
    if (ts.size() == 2) {
      const auto a = ts[0].records();
      const auto b = ts[1].records();
      std::optional<size_t> diff;
      for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        if (i >= a.size() || i >= b.size() || a[i].direction != b[i].direction ||
            a[i].tag != b[i].tag || a[i].length != b[i].length) {
          diff = i;
          break;
        }
      }
      j["sizes_identical"] = !diff.has_value();
      if (diff) j["first_difference"] = *diff;
      if (!o.json) {
        if (diff) {
          out << "sizes differ at message " << *diff << "\n";
        } else {
          out << "sizes identical\n";
        }
      }
    }
    if (o.json) out << j.dump() << "\n";
    return 0;
  } catch (const std::exception& e) {
    return ReportError(e, o.json, err);
  }
}

}  // namespace ptincl::cli
