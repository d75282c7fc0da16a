/*
    Copyright (C) 2026 The cepnet authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#include "cepnet/sim/metrics.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cepnet {
namespace {

namespace fs = std::filesystem;

const std::string SOURCE_DIR = CEPNET_SOURCE_DIR;

struct Run
{
  int code = -1;
  std::string out;
};

Run
cli(const std::string& args, const std::string& stdinText = "")
{
  std::string cmd = std::string(CEPNET_CLI) + " " + args + " 2>/dev/null";
  fs::path input;
  if (!stdinText.empty() || args.rfind("parse", 0) == 0) {
    input = fs::temp_directory_path() / ("cepnet-stdin-" + std::to_string(::getpid()));
    std::ofstream(input) << stdinText;
    cmd += " < " + input.string();
  }
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return r;
  }
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    r.out.append(buf, n);
  }
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (!input.empty()) {
    fs::remove(input);
  }
  return r;
}

std::string
slurp(const fs::path& p)
{
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class TempDir
{
public:
  TempDir()
    : m_path(fs::temp_directory_path() /
             ("cepnet-cli-" + std::to_string(::getpid()) + "-" +
              ::testing::UnitTest::GetInstance()->current_test_info()->name()))
  {
    fs::remove_all(m_path);
    fs::create_directories(m_path);
  }

  ~TempDir()
  {
    fs::remove_all(m_path);
  }

  fs::path
  operator/(const std::string& name) const
  {
    return m_path / name;
  }

private:
  fs::path m_path;
};

std::string
scenario(const std::string& name)
{
  return SOURCE_DIR + "/scenarios/" + name;
}

class ParseGolden : public ::testing::TestWithParam<int>
{
};

TEST_P(ParseGolden, MatchesAndIsStable)
{
  auto base = SOURCE_DIR + "/tests/golden/listing-" + std::to_string(GetParam());
  auto first = cli("parse --file " + base + ".query");
  ASSERT_EQ(first.code, 0);
  EXPECT_EQ(first.out, slurp(base + ".out"));
  EXPECT_EQ(cli("parse --file " + base + ".query").out, first.out);
  EXPECT_EQ(cli("parse", slurp(base + ".query")).out, first.out);
}

INSTANTIATE_TEST_SUITE_P(Listings, ParseGolden, ::testing::Range(1, 7));

TEST(Parse, ExitCodes)
{
  EXPECT_EQ(cli("parse", "").code, 1);
  EXPECT_EQ(cli("parse \"WINDOW(GPS_S1, 4s\"").code, 1);
  EXPECT_EQ(cli("parse \"FOO(GPS_S1)\"").code, 2);
  EXPECT_EQ(cli("parse \"WINDOW(GPS_S9, 4s)\"").code, 2);
  EXPECT_EQ(cli("parse \"WINDOW(GPS_S1, 4s)\"").code, 0);
}

TEST(Explain, CentralizedIsSingleNode)
{
  auto r = cli("explain --placement --scenario " + scenario("q3-centralized.scn"));
  ASSERT_EQ(r.code, 0);
  auto plan = nlohmann::json::parse(r.out.substr(0, r.out.find("\nnfn:") + 1));
  EXPECT_EQ(plan["mode"], "centralized");
  for (const auto& op : plan["operators"]) {
    EXPECT_EQ(op["node"], "b1");
  }
}

TEST(Explain, DistributedSpreadsListingThree)
{
  auto r = cli("explain --placement --scenario " + scenario("q3-distributed.scn"));
  ASSERT_EQ(r.code, 0);
  auto plan = nlohmann::json::parse(r.out.substr(0, r.out.find("\nnfn:") + 1));
  EXPECT_EQ(plan["coordinator"], "b6");
  std::set<std::string> nodes;
  for (const auto& op : plan["operators"]) {
    nodes.insert(op["node"].get<std::string>());
  }
  EXPECT_EQ(nodes, (std::set<std::string>{"b1", "b2", "b3", "b4", "b6"}));
  EXPECT_NE(r.out.find("nfn: (call 4 /node/b6/nfn_service_Join"), std::string::npos);
}

TEST(Explain, BadScenarioIsConfigError)
{
  EXPECT_EQ(cli("explain --scenario /nonexistent/x.scn").code, 3);
}

TEST(RunSim, MetricsAndSeedDeterminism)
{
  TempDir dir;
  auto a = cli("run-sim " + scenario("q2-distributed.scn") + " --seed 11 --metrics " + (dir / "a.csv").string() +
               " --trace " + (dir / "a.trace").string());
  auto b = cli("run-sim " + scenario("q2-distributed.scn") + " --seed 11 --trace " + (dir / "b.trace").string());
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(slurp(dir / "a.trace"), slurp(dir / "b.trace"));
  EXPECT_FALSE(slurp(dir / "a.trace").empty());
  auto rows = read_metrics_csv((dir / "a.csv").string());
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].query, "q2");
  EXPECT_NEAR(rows[0].values[0], rows[0].values[1] + rows[0].values[2] + rows[0].values[3], 1e-9);
}

TEST(RunSim, MissingDatasetFailsWithoutOutput)
{
  TempDir dir;
  std::ofstream(dir / "s.scn") << "topology preset:centralized\n"
                                  "stream GPS_S1 p1 /node/p1/gps gps missing.csv\n"
                                  "query q1 c1 0 - centralized WINDOW(GPS_S1, 4s)\n";
  auto r = cli("run-sim " + (dir / "s.scn").string() + " --metrics " + (dir / "m.csv").string());
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(fs::exists(dir / "m.csv"));
}

TEST(RunSim, SchemaMismatchIsConfigError)
{
  TempDir dir;
  std::ofstream(dir / "bad.csv") << "ts,latitude\n1000,49\n";
  std::ofstream(dir / "s.scn") << "topology preset:centralized\n"
                                  "stream GPS_S1 p1 /node/p1/gps gps bad.csv\n"
                                  "query q1 c1 0 - centralized WINDOW(GPS_S1, 4s)\n";
  EXPECT_EQ(cli("run-sim " + (dir / "s.scn").string()).code, 3);
}

TEST(Inspect, DumpFromRun)
{
  TempDir dir;
  ASSERT_EQ(cli("run-sim " + scenario("q1-centralized.scn") + " --dump-dir " + (dir / "dumps").string()).code, 0);
  auto r = cli("inspect " + (dir / "dumps" / "b1.dump").string());
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pit"), std::string::npos);
  EXPECT_NE(r.out.find("stream-fib"), std::string::npos);
}

TEST(Inspect, PitFacesAndEmptyCs)
{
  TempDir dir;
  std::ofstream(dir / "n.dump") << "[cs]\nkey,ts\n[pit]\nkey,kind,faces,ts\n/node/b1/query/ab,query,1 7,0\n";
  auto r = cli("inspect " + (dir / "n.dump").string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "cs\n  key  ts\n\npit\n  key                kind   faces  ts\n  /node/b1/query/ab  query  1 7    0\n");
  EXPECT_EQ(cli("inspect /nonexistent/n.dump").code, 3);
}

TEST(Metrics, TenRunsGiveMeanAndInterval)
{
  TempDir dir;
  std::string files;
  for (int i = 0; i < 10; ++i) {
    auto path = dir / ("m" + std::to_string(i) + ".csv");
    std::ofstream(path) << METRICS_HEADER << "\nq1," << 10 + i << ",1,2," << 7 + i << "\n";
    files += " " + path.string();
  }
  auto r = cli("metrics" + files);
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "query,column,n,mean,ci95_low,ci95_high");
  std::getline(in, line);
  // mean 14.5, sample sd 3.02765, t(0.975, 9) = 2.262157
  EXPECT_EQ(line, "q1,total_ms,10,14.500,12.334,16.666");
  std::getline(in, line);
  EXPECT_EQ(line, "q1,graph_ms,10,1.000,1.000,1.000");
}

TEST(Cli, UnknownCommandIsConfigError)
{
  EXPECT_EQ(cli("frobnicate").code, 3);
  EXPECT_EQ(cli("run-sim").code, 3);
}

} // namespace
} // namespace cepnet
