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

#include "cepnet/sim/dataset.hpp"
#include "cepnet/sim/metrics.hpp"
#include "cepnet/sim/scenario.hpp"
#include "cepnet/sim/simulator.hpp"
#include "cepnet/sim/topology.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

namespace cepnet {
namespace {

const std::string SOURCE_DIR = CEPNET_SOURCE_DIR;

ScenarioSpec
scenario(const std::string& text)
{
  std::istringstream in(text);
  return parse_scenario(in, "<test>", SOURCE_DIR + "/scenarios");
}

std::vector<std::string>
payloads(const QueryMetrics& q)
{
  std::vector<std::string> out;
  for (const auto& n : q.notifications) {
    out.push_back(std::to_string(n.ts) + " " + n.payload);
  }
  return out;
}

TEST(Topology, Presets)
{
  auto centralized = *preset_topology("centralized");
  EXPECT_EQ(centralized.nodes.size(), 4u);
  EXPECT_EQ(centralized.links.size(), 3u);
  EXPECT_EQ(centralized.ids(Role::Broker), std::vector<NodeId>{"b1"});
  auto distributed = *preset_topology("distributed");
  EXPECT_EQ(distributed.nodes.size(), 9u);
  EXPECT_EQ(distributed.ids(Role::Broker).size(), 6u);
  EXPECT_EQ(distributed.ids(Role::Producer).size(), 2u);
  EXPECT_EQ(distributed.ids(Role::Consumer).size(), 1u);
  EXPECT_FALSE(preset_topology("mesh"));
  centralized.validate();
  distributed.validate();
}

TEST(Topology, FormatRoundTrip)
{
  auto t = *preset_topology("distributed");
  std::istringstream in(format_topology(t));
  EXPECT_EQ(format_topology(parse_topology(in)), format_topology(t));
}

TEST(Topology, ValidationErrors)
{
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    parse_topology(in).validate();
  };
  EXPECT_THROW(parse("node b1 broker\nnode b2 broker\n"), ConfigError);
  EXPECT_THROW(parse("node b1 broker\nnode b1 broker\n"), ConfigError);
  EXPECT_THROW(parse("node b1 broker\nlink b1 b9 1\n"), ConfigError);
  EXPECT_THROW(parse("node b1 broker\nlink b1 b1 1\n"), ConfigError);
  EXPECT_THROW(parse("node b1 broker\nnode b2 broker\nlink b1 b2 -1\n"), ConfigError);
  EXPECT_THROW(parse("node b1 router\n"), ConfigError);
  EXPECT_THROW(parse("node p1 producer\nnode c1 consumer\nlink p1 c1 1\n"), ConfigError);
  try {
    parse("node b1 broker\nnode b2 broker\nbogus\n");
    FAIL();
  }
  catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos) << e.what();
  }
}

TEST(Dataset, ParsesAndReorders)
{
  std::istringstream in("ts,s_id,latitude,longitude,altitude,accuracy,distance,speed\n"
                        "2000,s1,49.1,8.1,100,5,10,3\n"
                        "1000,s1,49.0,8.0,100,5,10,2\n"
                        "3000,s1,49.2,8.2,100,5,10,4\n");
  auto d = parse_dataset(in, schema_by_id("gps"));
  ASSERT_EQ(d.tuples.size(), 3u);
  EXPECT_EQ(d.reordered, 1u);
  EXPECT_EQ(d.tuples[0].ts, 1000);
  EXPECT_EQ(d.tuples[2].ts, 3000);

  ReplayBinding b;
  b.alias = "GPS_S1";
  b.producer = "p1";
  b.name = Name::parse("/node/p1/gps");
  b.offsetMs = 500;
  auto packets = replay_dataset(b, d);
  ASSERT_EQ(packets.size(), 3u);
  EXPECT_EQ(packets[0].emitUs, 1'500'000);
  EXPECT_EQ(packets[2].emitUs, 3'500'000);
  EXPECT_EQ(packets[1].packet.tuple.ts, 2000);
}

TEST(Dataset, SchemaMismatch)
{
  std::istringstream in("ts,latitude\n1000,49\n");
  EXPECT_THROW(parse_dataset(in, schema_by_id("gps")), SchemaMismatch);
  EXPECT_THROW(schema_by_id("weather"), DatasetError);
  EXPECT_THROW(load_dataset("/nonexistent/file.csv", schema_by_id("gps")), DatasetError);
}

TEST(Dataset, GeneratorsAreSeeded)
{
  std::ostringstream a;
  std::ostringstream b;
  write_dataset(a, generate_gps(5, 50));
  write_dataset(b, generate_gps(5, 50));
  EXPECT_EQ(a.str(), b.str());
  std::ostringstream c;
  write_dataset(c, generate_gps(6, 50));
  EXPECT_NE(a.str(), c.str());
  auto plug = generate_plug(1, 10);
  EXPECT_EQ(plug.tuples.size(), 10u);
  std::istringstream back(a.str());
  EXPECT_EQ(parse_dataset(back, schema_by_id("gps")).tuples.size(), 50u);
}

TEST(Scenario, ParseErrors)
{
  EXPECT_THROW(scenario("bogus line\n"), ConfigError);
  EXPECT_THROW(scenario("topology preset:ring\n"), ConfigError);
  EXPECT_THROW(scenario("topology preset:centralized\nquery q1 c9 0 - centralized WINDOW(GPS_S1, 4s)\n"),
               ConfigError);
  EXPECT_THROW(scenario("topology preset:centralized\nquery q1 c1 0 - centralized WINDOW(GPS_S9, 4s)\n"),
               ConfigError);
  EXPECT_THROW(scenario("topology preset:centralized\npoll q7 1000\n"), ConfigError);
}

TEST(Metrics, NaturalOrder)
{
  EXPECT_TRUE(natural_less("q2", "q10"));
  EXPECT_FALSE(natural_less("q10", "q2"));
  EXPECT_TRUE(natural_less("a", "b"));
}

TEST(Metrics, CsvRowsAddUp)
{
  Metrics m;
  for (const char* id : {"q10", "q2", "q1"}) {
    QueryMetrics q;
    q.id = id;
    q.graphMs = 1.5;
    q.placementMs = 2.25;
    q.communicationMs = 4;
    q.totalMs = 7.75;
    m.queries.push_back(q);
  }
  std::ostringstream out;
  write_metrics_csv(out, m);
  std::istringstream in(out.str());
  auto rows = read_metrics_csv(in);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].query, "q1");
  EXPECT_EQ(rows[1].query, "q2");
  EXPECT_EQ(rows[2].query, "q10");
  for (const auto& r : rows) {
    EXPECT_DOUBLE_EQ(r.values[0], r.values[1] + r.values[2] + r.values[3]);
  }
}

TEST(Metrics, EmptyIsHeaderOnly)
{
  std::ostringstream out;
  write_metrics_csv(out, {});
  std::istringstream in(out.str());
  EXPECT_TRUE(read_metrics_csv(in).empty());
  EXPECT_NE(out.str().find(METRICS_HEADER), std::string::npos);
  std::istringstream bad("query,total\n");
  EXPECT_THROW(read_metrics_csv(bad), Error);
}

TEST(Metrics, ConfidenceInterval)
{
  auto one = confidence_interval({4.0});
  EXPECT_EQ(one.n, 1u);
  EXPECT_EQ(one.lo, 4.0);
  EXPECT_EQ(one.hi, 4.0);
  // mean 2, sample sd 1, t(0.975, 2) = 4.302652729911275
  auto ci = confidence_interval({1, 2, 3});
  EXPECT_DOUBLE_EQ(ci.mean, 2);
  EXPECT_NEAR(ci.hi - ci.mean, 4.302652729911275 / std::sqrt(3.0), 1e-9);
  EXPECT_NEAR(ci.mean - ci.lo, ci.hi - ci.mean, 1e-12);
}

TEST(Metrics, SummaryDropsNan)
{
  std::vector<std::vector<MetricsRow>> runs(3);
  for (int i = 0; i < 3; ++i) {
    runs[i].push_back({"q1", {1.0 + i, 1, 0, i == 1 ? std::nan("") : 0.0 + i}});
  }
  auto s = summarize_metrics(runs);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].columns[0].n, 3u);
  EXPECT_EQ(s[0].columns[3].n, 2u);
  EXPECT_DOUBLE_EQ(s[0].columns[0].mean, 2);
}

TEST(Simulator, DisconnectedTopologyIsRejected)
{
  TopologyConfig t;
  t.nodes = {{"b1", Role::Broker, 0}, {"b2", Role::Broker, 0}};
  ScenarioSpec spec;
  spec.topology = t;
  EXPECT_THROW(run_scenario(spec), ConfigError);
}

const char* PUSH = "topology preset:centralized\n"
                   "seed 3\n"
                   "stream GPS_S1 p1 /node/p1/gps gps generate:100\n"
                   "query push c1 0 200000 centralized FILTER(WINDOW(GPS_S1, 4s), 'latitude'<50)\n";

TEST(Simulator, DeterministicTrace)
{
  auto spec = scenario(PUSH);
  auto a = run_scenario(spec);
  auto b = run_scenario(spec);
  EXPECT_EQ(a.traceHash, b.traceHash);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.traceHash, trace_hash(a.trace));
  EXPECT_GT(a.events, 0u);
}

TEST(Simulator, PushUsesTwoControlPackets)
{
  auto r = run_scenario(scenario(PUSH));
  const auto* q = r.metrics.query("push");
  ASSERT_NE(q, nullptr);
  EXPECT_EQ(q->notifications.size(), 100u);
  EXPECT_EQ(q->controlPackets, 2u);
  EXPECT_EQ(r.causalityViolations, 0u);
  for (std::size_t i = 1; i < q->notifications.size(); ++i) {
    EXPECT_LT(q->notifications[i - 1].ts, q->notifications[i].ts);
  }
}

TEST(Simulator, PollingNeedsAControlPacketPerResult)
{
  auto r = run_scenario(scenario(std::string(PUSH) + "poll push 1000\n"));
  const auto* q = r.metrics.query("push");
  ASSERT_NE(q, nullptr);
  EXPECT_GE(q->controlPackets, 100u);
}

TEST(Simulator, NodesConservePackets)
{
  auto r = run_scenario(scenario(PUSH));
  for (const auto& n : r.metrics.nodes) {
    const auto& c = n.counters;
    std::uint64_t received = 0;
    for (const auto& [type, count] : c.in) {
      received += count;
    }
    EXPECT_EQ(received, c.consumed + c.forwarded + c.dropped) << n.id;
  }
}

TEST(Simulator, DistributedJoinSendsIntermediateResults)
{
  auto line = "topology preset:distributed\n"
              "seed 3\n"
              "stream GPS_S1 p1 /node/p1/gps gps generate:30\n"
              "stream GPS_S2 p2 /node/p2/gps gps generate:30 offset=500\n"
              "query q3 c1 0 60000 distributed JOIN(FILTER(WINDOW(GPS_S1, 4s), 'latitude'<50), "
              "FILTER(WINDOW(GPS_S2, 4s), 'latitude'<50), GPS_S1.'ts' = GPS_S2.'ts')\n";
  auto r = run_scenario(scenario(line));
  const auto* q = r.metrics.query("q3");
  ASSERT_NE(q, nullptr);
  EXPECT_GE(q->resultHops, 2u);
  EXPECT_EQ(q->coordinator, "b6");
  EXPECT_EQ(r.causalityViolations, 0u);

  std::string central = line;
  central.replace(central.find("preset:distributed"), 18, "preset:centralized");
  central.replace(central.find(" distributed JOIN"), 12, " centralized");
  auto rc = run_scenario(scenario(central));
  EXPECT_EQ(rc.metrics.query("q3")->resultHops, 0u);
  EXPECT_EQ(rc.metrics.query("q3")->placementMs, 0);
}

TEST(Simulator, DeployOntoDeadNodeTimesOut)
{
  auto spec = scenario("topology preset:distributed\n"
                       "seed 3\n"
                       "stream GPS_S1 p1 /node/p1/gps gps generate:20\n"
                       "query q2 c1 0 30000 distributed FILTER(WINDOW(GPS_S1, 4s), 'latitude'<50)\n"
                       "fail b1 5\n");
  auto r = run_scenario(spec);
  const auto* q = r.metrics.query("q2");
  ASSERT_NE(q, nullptr);
  EXPECT_GE(q->deployTimeouts, 1u);
  EXPECT_TRUE(q->notifications.empty());
  EXPECT_GT(r.lostToFailures, 0u);
}

TEST(Simulator, DumpsEveryNode)
{
  SimOptions options;
  options.dumpNodes = true;
  auto r = run_scenario(scenario(PUSH), options);
  ASSERT_EQ(r.dumps.size(), 1u);
  EXPECT_NE(r.dumps.at("b1").find("[pit]"), std::string::npos);
}

class QueryPipelines : public ::testing::TestWithParam<int>
{
};

TEST_P(QueryPipelines, PresetsAgreeOnResults)
{
  auto id = "q" + std::to_string(GetParam());
  auto c = run_scenario(load_scenario(SOURCE_DIR + "/scenarios/" + id + "-centralized.scn"));
  auto d = run_scenario(load_scenario(SOURCE_DIR + "/scenarios/" + id + "-distributed.scn"));
  const auto* qc = c.metrics.query(id);
  const auto* qd = d.metrics.query(id);
  ASSERT_NE(qc, nullptr);
  ASSERT_NE(qd, nullptr);
  EXPECT_FALSE(qc->notifications.empty());
  EXPECT_EQ(payloads(*qc), payloads(*qd));
  EXPECT_EQ(c.causalityViolations, 0u);
  EXPECT_EQ(d.causalityViolations, 0u);
  for (const auto* q : {qc, qd}) {
    EXPECT_DOUBLE_EQ(q->totalMs, q->graphMs + q->placementMs + q->communicationMs);
  }
}

INSTANTIATE_TEST_SUITE_P(Listings, QueryPipelines, ::testing::Range(1, 7));

} // namespace
} // namespace cepnet
