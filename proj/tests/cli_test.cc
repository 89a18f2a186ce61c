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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include <gtest/gtest.h>

#include "ptincl/cli/commands.hpp"
#include "ptincl/crypto/key_io.hpp"
#include "ptincl/transport/transcript.hpp"

namespace ptincl::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ptincl_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ::unsetenv("PTINCL_SEED");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string File(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::string Path(const std::string& name) { return (dir_ / name).string(); }

  std::string Diamond() {
    return File("diamond.json",
                R"({"star": {"vertices": [[5,0],[0,5],[-5,0],[0,-5]], "kernel": [0,0]}})");
  }
  std::string Holed() {
    return File("holed.json", R"({"polygon": {"rings": [
      {"vertices": [[-20,-20],[20,-20],[20,20],[-20,20]], "role": "outer"},
      {"vertices": [[-5,-5],[-5,5],[5,5],[5,-5]], "role": "hole"}]}})");
  }
  std::string Pt(int64_t x, int64_t y) {
    return File("p" + std::to_string(x) + "_" + std::to_string(y) + ".json",
                "{\"point\": [" + std::to_string(x) + ", " +
                    std::to_string(y) + "]}");
  }

  fs::path dir_;
};

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST_F(CliTest, OracleTokens) {
  std::ostringstream out, err;
  OracleOptions o{Diamond(), Pt(3, 1), false};
  EXPECT_EQ(CmdOracle(o, out, err), 0);
  EXPECT_EQ(out.str(), "inside\n");
  out.str("");
  o.point = Pt(5, 5);
  EXPECT_EQ(CmdOracle(o, out, err), 0);
  EXPECT_EQ(out.str(), "outside\n");
  out.str("");
  o.point = Pt(0, 5);
  EXPECT_EQ(CmdOracle(o, out, err), 0);
  EXPECT_EQ(out.str(), "inside (boundary)\n");
  out.str("");
  o.polygon = Holed();
  o.point = Pt(1, 1);
  EXPECT_EQ(CmdOracle(o, out, err), 0);
  EXPECT_EQ(out.str(), "outside\n");
}

TEST_F(CliTest, OracleRejectsBadInput) {
  std::ostringstream out, err;
  const std::string bad = File("bad.json",
      R"({"star": {"vertices": [[5,0],[0,5],[-5,0],[0,-5]], "kernel": [9,9]}})");
  EXPECT_EQ(CmdOracle({bad, Pt(0, 0), false}, out, err), 2);
  EXPECT_NE(err.str().find("kernel"), std::string::npos) << err.str();
  const std::string floats = File("f.json", R"({"point": [1.5, 2]})");
  EXPECT_EQ(CmdOracle({Diamond(), floats, false}, out, err), 2);
  EXPECT_EQ(CmdOracle({Path("missing.json"), Pt(0, 0), false}, out, err), 2);
}

TEST_F(CliTest, SimulateMatchesOracleAndIsDeterministic) {
  for (const char* proto : {"p41", "p42", "p42r"}) {
    SimulateOptions o;
    o.protocol = proto;
    o.seed = 11;
    o.point = Pt(3, 1);
    o.polygon = Diamond();
    o.transcript = Path(std::string(proto) + "_a.jsonl");
    std::ostringstream out, err;
    ASSERT_EQ(CmdSimulate(o, out, err), 0) << err.str();
    EXPECT_EQ(out.str().substr(0, 7), "inside\n");
    EXPECT_NE(out.str().find(std::string("protocol ") + proto), std::string::npos);
    o.transcript = Path(std::string(proto) + "_b.jsonl");
    std::ostringstream out2;
    ASSERT_EQ(CmdSimulate(o, out2, err), 0);
    EXPECT_TRUE(transport::Transcript::FromJsonLines(
                    Slurp(Path(std::string(proto) + "_a.jsonl")))
                    .SameFrames(transport::Transcript::FromJsonLines(
                        Slurp(o.transcript))));
    o.point = Pt(5, 5);
    std::ostringstream out3;
    ASSERT_EQ(CmdSimulate(o, out3, err), 0);
    EXPECT_EQ(out3.str().substr(0, 8), "outside\n");
  }
  SimulateOptions o;
  o.protocol = "p51";
  o.seed = 3;
  o.polygon = Holed();
  o.point = Pt(13, 1);
  std::ostringstream out, err;
  ASSERT_EQ(CmdSimulate(o, out, err), 0) << err.str();
  EXPECT_EQ(out.str().substr(0, 7), "inside\n");
  EXPECT_NE(out.str().find("chi 1"), std::string::npos) << out.str();
}

TEST_F(CliTest, SimulateJson) {
  SimulateOptions o;
  o.protocol = "p41";
  o.seed = 1;
  o.json = true;
  o.point = Pt(1, 1);
  o.polygon = Diamond();
  std::ostringstream out, err;
  ASSERT_EQ(CmdSimulate(o, out, err), 0);
  EXPECT_NE(out.str().find("\"result\":\"inside\""), std::string::npos);
  EXPECT_NE(out.str().find("\"rounds\":17"), std::string::npos) << out.str();
}

TEST_F(CliTest, OnRayAndInvalidExitCodes) {
  SimulateOptions o;
  o.protocol = "p51";
  o.seed = 1;
  o.point = Pt(30, 20);
  o.polygon = Holed();
  std::ostringstream out, err;
  EXPECT_EQ(CmdSimulate(o, out, err), 4);
  EXPECT_NE(err.str().find("ray"), std::string::npos) << err.str();
  o.protocol = "p43";
  EXPECT_EQ(CmdSimulate(o, out, err), 2);
  o.protocol = "p41";
  o.polygon = Holed();
  o.point = Pt(1, 2);
  EXPECT_EQ(CmdSimulate(o, out, err), 2);
}

TEST_F(CliTest, SeedPrecedence) {
  EXPECT_EQ(ResolveSeed(7), 7u);
  ::setenv("PTINCL_SEED", "42", 1);
  EXPECT_EQ(SeedFromEnv(), 42u);
  EXPECT_EQ(ResolveSeed(std::nullopt), 42u);
  EXPECT_EQ(ResolveSeed(7), 7u);
  ::setenv("PTINCL_SEED", "x1", 1);
  EXPECT_THROW(SeedFromEnv(), Error);
  ::unsetenv("PTINCL_SEED");
  EXPECT_FALSE(SeedFromEnv().has_value());
}

TEST_F(CliTest, KeygenRoundTrip) {
  std::ostringstream out, err;
  KeygenOptions k{512, Path("k1"), 5, false};
  fs::create_directories(k.out_dir);
  ASSERT_EQ(CmdKeygen(k, out, err), 0) << err.str();
  EXPECT_TRUE(fs::exists(Path("k1/secret.key")));
  EXPECT_TRUE(fs::exists(Path("k1/public.key")));
  const auto perms = fs::status(Path("k1/secret.key")).permissions();
  EXPECT_EQ(perms & (fs::perms::group_all | fs::perms::others_all),
            fs::perms::none);
  k.out_dir = Path("k2");
  fs::create_directories(k.out_dir);
  ASSERT_EQ(CmdKeygen(k, out, err), 0);
  EXPECT_EQ(Slurp(Path("k1/secret.key")), Slurp(Path("k2/secret.key")));
  k.out_dir = Path("k3");
  k.seed = 6;
  fs::create_directories(k.out_dir);
  ASSERT_EQ(CmdKeygen(k, out, err), 0);
  EXPECT_NE(Slurp(Path("k1/public.key")), Slurp(Path("k3/public.key")));

  k.out_dir = Path("nowhere/deeper");
  EXPECT_EQ(CmdKeygen(k, out, err), 2);
  EXPECT_FALSE(fs::exists(Path("nowhere")));
}

TEST_F(CliTest, RunOverLoopback) {
  std::ostringstream kout, kerr;
  fs::create_directories(Path("keys"));
  ASSERT_EQ(CmdKeygen({512, Path("keys"), 9, false}, kout, kerr), 0);

  std::promise<uint16_t> port;
  RunOptions bob;
  bob.protocol = "p42r";
  bob.seed = 2;
  bob.role = "bob";
  bob.listen = "127.0.0.1:0";
  bob.input = Diamond();
  bob.transcript = Path("bob.jsonl");
  bob.on_listening = [&](uint16_t p) { port.set_value(p); };
  std::ostringstream bout, berr;
  int bob_rc = -1;
  std::thread t([&] { bob_rc = CmdRun(bob, bout, berr); });

  RunOptions alice;
  alice.protocol = "p42r";
  alice.seed = 3;
  alice.role = "alice";
  alice.keys_dir = Path("keys");
  alice.input = Pt(3, 1);
  alice.transcript = Path("alice.jsonl");
  alice.connect = "127.0.0.1:" + std::to_string(port.get_future().get());
  std::ostringstream aout, aerr;
  const int alice_rc = CmdRun(alice, aout, aerr);
  t.join();
  EXPECT_EQ(alice_rc, 0) << aerr.str();
  EXPECT_EQ(bob_rc, 0) << berr.str();
  EXPECT_EQ(aout.str(), "inside\n");
  EXPECT_EQ(bout.str(), "inside\n");

  std::ostringstream out, err;
  ASSERT_EQ(CmdAudit({{Path("alice.jsonl"), Path("bob.jsonl")}, false}, out, err),
            0) << err.str();
  EXPECT_NE(out.str().find("sizes identical"), std::string::npos) << out.str();
}

TEST_F(CliTest, RunRejectsBadRoleAndEndpoints) {
  std::ostringstream out, err;
  RunOptions o;
  o.role = "carol";
  o.listen = "127.0.0.1:0";
  o.input = Pt(1, 1);
  EXPECT_EQ(CmdRun(o, out, err), 2);
  o.role = "alice";
  o.connect = "127.0.0.1:1";
  EXPECT_EQ(CmdRun(o, out, err), 2);
  o.listen.clear();
  EXPECT_EQ(CmdRun(o, out, err), 3);
}

TEST_F(CliTest, RunBobInvalidStarFailsBeforeNetwork) {
  std::ostringstream out, err;
  RunOptions o;
  o.role = "bob";
  o.connect = "127.0.0.1:1";
  o.input = File("bad.json",
      R"({"star": {"vertices": [[5,0],[0,5],[-5,0],[0,-5]], "kernel": [9,9]}})");
  EXPECT_EQ(CmdRun(o, out, err), 2);
}

TEST_F(CliTest, AuditSingleAndDifferentAndTruncated) {
  SimulateOptions o;
  o.protocol = "p41";
  o.seed = 1;
  o.point = Pt(1, 1);
  o.polygon = Diamond();
  o.transcript = Path("a.jsonl");
  std::ostringstream out, err;
  ASSERT_EQ(CmdSimulate(o, out, err), 0);
  o.protocol = "p42r";
  o.transcript = Path("b.jsonl");
  ASSERT_EQ(CmdSimulate(o, out, err), 0);
  out.str("");
  EXPECT_EQ(CmdAudit({{Path("a.jsonl")}, false}, out, err), 0);
  EXPECT_NE(out.str().find("rounds 17"), std::string::npos) << out.str();
  out.str("");
  EXPECT_EQ(CmdAudit({{Path("a.jsonl"), Path("b.jsonl")}, true}, out, err), 0);
  EXPECT_NE(out.str().find("\"sizes_identical\":false"), std::string::npos)
      << out.str();
  const std::string text = Slurp(Path("a.jsonl"));
  const std::string cut = File("cut.jsonl", text.substr(0, text.size() / 2));
  EXPECT_NE(CmdAudit({{cut}, false}, out, err), 0);
}

TEST_F(CliTest, BenchWritesCsv) {
  BenchOptions b;
  b.protocol = "p42r";
  b.seed = 4;
  b.sizes = {4, 8};
  b.trials = 2;
  b.csv = Path("bench.csv");
  std::ostringstream out, err;
  ASSERT_EQ(CmdBench(b, out, err), 0) << err.str();
  std::istringstream csv(Slurp(b.csv));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line,
            "n,mean_rounds,mean_bytes,mean_wall_ms,mean_probes,max_probes,bound,"
            "bound_ok");
  int rows = 0;
  while (std::getline(csv, line)) {
    EXPECT_EQ(line.substr(line.size() - 5), ",true") << line;
    ++rows;
  }
  EXPECT_EQ(rows, 2);
}

#ifdef PTINCL_CLI_PATH
int Shell(const std::string& cmd) {
  const int st = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string bin = PTINCL_CLI_PATH;
  EXPECT_EQ(Shell(bin + " --help"), 0);
  EXPECT_EQ(Shell(bin + " oracle --polygon " + Diamond() + " --point " + Pt(1, 1)),
            0);
  EXPECT_EQ(Shell(bin + " simulate --protocol p99 --polygon " + Diamond() +
                  " --point " + Pt(1, 1)),
            2);
  EXPECT_EQ(Shell(bin + " frobnicate"), 2);
  EXPECT_EQ(Shell(bin + " run --role alice --point " + Pt(1, 1) +
                  " --connect 127.0.0.1:1"),
            3);
  EXPECT_EQ(Shell(bin + " simulate --protocol p51 --seed 1 --polygon " +
                  Holed() + " --point " + Pt(30, 20)),
            4);
}
#endif

}  // namespace
}  // namespace ptincl::cli
