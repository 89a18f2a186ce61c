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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ptincl/cli/commands.hpp"

namespace {

using ptincl::cli::CommonOptions;

void AddCommon(CLI::App* app, CommonOptions& o) {
  app->add_option("--protocol", o.protocol, "p41, p42, p42r or p51")
      ->check(CLI::IsMember({"p41", "p42", "p42r", "p51"}));
  app->add_option("--seed", o.seed, "master seed (overrides PTINCL_SEED)");
  app->add_option("--key-bits", o.key_bits, "additive modulus size");
  app->add_option("--comm-bits", o.comm_bits, "commutative group size");
  app->add_option("--public-seed", o.public_seed,
                  "seed for the shared commutative group");
  app->add_option("--blind-bits", o.blind_bits, "blinding factor size");
  app->add_option("--coord-bound", o.coord_bound, "coordinate bound");
  app->add_option("--tolerance", o.tolerance, "characteristic tolerance");
  app->add_flag("--json", o.json, "JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Private point inclusion between two parties"};
  app.require_subcommand(1);

  ptincl::cli::KeygenOptions keygen;
  auto* k = app.add_subcommand("keygen", "generate an additive key pair");
  k->add_option("--bits", keygen.bits, "modulus size");
  k->add_option("--out", keygen.out_dir, "output directory")->required();
  k->add_option("--seed", keygen.seed, "seed");
  k->add_flag("--json", keygen.json, "JSON output");

  ptincl::cli::RunOptions run;
  std::string point, polygon;
  auto* r = app.add_subcommand("run", "run one party over TCP");
  AddCommon(r, run);
  r->add_option("--role", run.role, "alice or bob")
      ->required()
      ->check(CLI::IsMember({"alice", "bob"}));
  auto* listen = r->add_option("--listen", run.listen, "host:port to listen on");
  auto* connect = r->add_option("--connect", run.connect, "host:port to dial");
  listen->excludes(connect);
  r->add_option("--point", point, "point file (alice)");
  r->add_option("--polygon", polygon, "polygon file (bob)");
  r->add_option("--keys", run.keys_dir, "key directory from keygen");
  r->add_option("--transcript", run.transcript, "transcript output file");

  ptincl::cli::SimulateOptions sim;
  auto* s = app.add_subcommand("simulate", "run both parties in one process");
  AddCommon(s, sim);
  s->add_option("--point", sim.point, "point file")->required();
  s->add_option("--polygon", sim.polygon, "polygon file")->required();
  s->add_option("--transcript", sim.transcript, "transcript output file");

  ptincl::cli::OracleOptions oracle;
  auto* o = app.add_subcommand("oracle", "plaintext inclusion test");
  o->add_option("--polygon", oracle.polygon, "polygon file")->required();
  o->add_option("--point", oracle.point, "point file")->required();
  o->add_flag("--json", oracle.json, "JSON output");

  ptincl::cli::BenchOptions bench;
  auto* b = app.add_subcommand("bench", "rounds, bytes and time against n");
  AddCommon(b, bench);
  b->add_option("--sizes", bench.sizes, "polygon sizes")->delimiter(',');
  b->add_option("--trials", bench.trials, "trials per size");
  b->add_option("--csv", bench.csv, "CSV output file");

  ptincl::cli::AuditOptions audit;
  auto* a = app.add_subcommand("audit", "transcript counters and comparison");
  a->add_option("files", audit.files, "one or two transcript files")
      ->required()
      ->expected(1, 2);
  a->add_flag("--json", audit.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (k->parsed()) return ptincl::cli::CmdKeygen(keygen, std::cout, std::cerr);
  if (r->parsed()) {
    run.input = run.role == "alice" ? point : polygon;
    return ptincl::cli::CmdRun(run, std::cout, std::cerr);
  }
  if (s->parsed()) return ptincl::cli::CmdSimulate(sim, std::cout, std::cerr);
  if (o->parsed()) return ptincl::cli::CmdOracle(oracle, std::cout, std::cerr);
  if (b->parsed()) return ptincl::cli::CmdBench(bench, std::cout, std::cerr);
  if (a->parsed()) return ptincl::cli::CmdAudit(audit, std::cout, std::cerr);
  return 2;
}
