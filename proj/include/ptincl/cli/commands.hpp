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

#ifndef PTINCL_CLI_COMMANDS_HPP_
#define PTINCL_CLI_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ptincl/protocols/config.hpp"

namespace ptincl::cli {

// Flags shared by the protocol-running subcommands.
struct CommonOptions {
  std::string protocol = "p42r";
  // --seed; falls back to PTINCL_SEED, then to fresh entropy.
  std::optional<uint64_t> seed;
  unsigned key_bits = 512;
  unsigned comm_bits = 512;
  uint64_t public_seed = 0;
  unsigned blind_bits = 40;
  int64_t coord_bound = 1 << 20;
  double tolerance = 1e-6;
  bool json = false;
};

// Value of PTINCL_SEED, if set. Throws Error(kValidation) when malformed.
std::optional<uint64_t> SeedFromEnv();
uint64_t ResolveSeed(const std::optional<uint64_t>& flag);

// Throws Error(kValidation) for an unknown protocol name.
protocols::SessionConfig MakeConfig(const CommonOptions& options,
                                    uint64_t seed);

// Writes a diagnostic and returns the exit code for the failure.
int ReportError(const std::exception& e, bool json, std::ostream& err);

struct KeygenOptions {
  unsigned bits = 512;
  std::string out_dir;
  std::optional<uint64_t> seed;
  bool json = false;
};
int CmdKeygen(const KeygenOptions& options, std::ostream& out,
              std::ostream& err);

struct RunOptions : CommonOptions {
  std::string role;
  std::string listen;
  std::string connect;
  // Point file for Alice, polygon file for Bob.
  std::string input;
  std::string keys_dir;
  std::string transcript;
  // Called with the bound port once a listener is ready.
  std::function<void(uint16_t)> on_listening;
};
int CmdRun(const RunOptions& options, std::ostream& out, std::ostream& err);

struct SimulateOptions : CommonOptions {
  std::string point;
  std::string polygon;
  std::string transcript;
};
int CmdSimulate(const SimulateOptions& options, std::ostream& out,
                std::ostream& err);

struct OracleOptions {
  std::string polygon;
  std::string point;
  bool json = false;
};
int CmdOracle(const OracleOptions& options, std::ostream& out,
              std::ostream& err);

struct BenchOptions : CommonOptions {
  std::vector<size_t> sizes = {8, 16, 32, 64};
  size_t trials = 3;
  // CSV destination; empty writes to `out`.
  std::string csv;
};
// CSV columns: n, mean_rounds, mean_bytes, mean_wall_ms, mean_probes,
// max_probes, bound, bound_ok. Exits 4 if any run breaks its round or
// probe bound.
int CmdBench(const BenchOptions& options, std::ostream& out,
             std::ostream& err);

struct AuditOptions {
  std::vector<std::string> files;
  bool json = false;
};
int CmdAudit(const AuditOptions& options, std::ostream& out,
             std::ostream& err);

}  // namespace ptincl::cli

#endif  // PTINCL_CLI_COMMANDS_HPP_
