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

#include "cepnet/engine/node.hpp"
#include "cepnet/operators/evaluators.hpp"
#include "cepnet/operators/heatmap.hpp"
#include "cepnet/operators/relational.hpp"
#include "cepnet/packet/wire.hpp"
#include "cepnet/placement/path.hpp"
#include "cepnet/query/errors.hpp"
#include "cepnet/query/parser.hpp"
#include "cepnet/sim/metrics.hpp"
#include "cepnet/sim/scenario.hpp"
#include "cepnet/sim/simulator.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/predict-harness.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

namespace cepnet {
namespace {

const std::string SOURCE_DIR = CEPNET_SOURCE_DIR;

/// Outcome of one criterion. `detail` carries the measured numbers.
struct Verdict
{
  bool pass = true;
  std::string detail;

  void
  require(bool ok, const std::string& what)
  {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }

  void
  note(const std::string& what)
  {
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

std::string
fixed(double v, int digits = 3)
{
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

ScenarioSpec
scenario_text(const std::string& text)
{
  std::istringstream in(text);
  return parse_scenario(in, "<acceptance>", SOURCE_DIR + "/scenarios");
}

/// Least-squares slope of log(y) over log(x).
double
log_log_slope(const std::vector<double>& x, const std::vector<double>& y)
{
  double n = static_cast<double>(x.size());
  double sx = 0;
  double sy = 0;
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]);
    double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// 1

std::string
filter_chain(int operators)
{
  std::string q = "WINDOW(GPS_S1, 4s)";
  for (int i = 1; i < operators; ++i) {
    q = "FILTER(" + q + ", 'latitude'<" + std::to_string(50 + i) + ")";
  }
  return q;
}

std::string
join_tree(int operators)
{
  int extra = operators - 3;
  std::string left = filter_chain(1 + extra / 2);
  std::string right = "WINDOW(GPS_S2, 4s)";
  for (int i = 0; i < extra - extra / 2; ++i) {
    right = "FILTER(" + right + ", 'speed'>" + std::to_string(i) + ")";
  }
  return "JOIN(" + left + ", " + right + ", GPS_S1.'ts' = GPS_S2.'ts')";
}

Verdict
parser_scaling()
{
  using Clock = std::chrono::steady_clock;
  Verdict v;
  double slowest = 0;
  auto family = [&](const std::string& label, int from, const std::function<std::string(int)>& make) {
    std::vector<double> sizes;
    std::vector<double> times;
    for (int n = from; n <= 20; ++n) {
      std::string q = make(n);
      if (create_operator_graph(q).count() != static_cast<std::size_t>(n)) {
        v.require(false, label + " generator produced the wrong size at " + std::to_string(n));
        return;
      }
      double best = INFINITY;
      for (int batch = 0; batch < 7; ++batch) {
        auto t0 = Clock::now();
        for (int rep = 0; rep < 40; ++rep) {
          auto single = Clock::now();
          create_operator_graph(q);
          slowest = std::max(slowest, std::chrono::duration<double, std::milli>(Clock::now() - single).count());
        }
        best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count() / 40);
      }
      sizes.push_back(n);
      times.push_back(best);
    }
    double slope = log_log_slope(sizes, times);
    v.note(label + " exponent=" + fixed(slope, 2) + " t(20)=" + fixed(times.back(), 4) + "ms");
    v.require(slope < 1.5, label + " grows super-linearly");
  };
  family("filter", 1, filter_chain);
  family("join", 3, join_tree);
  v.note("slowest parse=" + fixed(slowest, 4) + "ms");
  v.require(slowest < 10, "a parse took 10 ms or more");
  return v;
}

// 2

Verdict
push_economy()
{
  Verdict v;
  const std::string base = "topology preset:centralized\n"
                           "seed 3\n"
                           "stream GPS_S1 p1 /node/p1/gps gps generate:100\n"
                           "query q c1 0 200000 centralized FILTER(WINDOW(GPS_S1, 4s), 'latitude'<50)\n";
  auto spec = scenario_text(base);
  std::size_t qualifying = 0;
  auto push = run_scenario(spec);
  const auto* q = push.metrics.query("q");
  for (const auto& n : q->notifications) {
    qualifying += n.payload.empty() ? 0 : 1;
  }
  v.note("push notifications=" + std::to_string(q->notifications.size()) +
         " control=" + std::to_string(q->controlPackets));
  v.require(q->notifications.size() == 100, "expected exactly 100 notifications");
  v.require(qualifying == 100, "expected 100 non-empty results");
  v.require(q->controlPackets == 2, "expected exactly 2 control packets");

  auto poll = run_scenario(scenario_text(base + "poll q 1000\n"));
  const auto* p = poll.metrics.query("q");
  v.note("poll control=" + std::to_string(p->controlPackets));
  v.require(p->controlPackets >= 100, "polling used fewer than 100 control packets");
  return v;
}

// 3

Verdict
freshness()
{
  Verdict v;
  std::size_t adds = 0;
  std::size_t answered = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    SeededRandom rng(seed);
    NodeConfig config;
    config.id = "b1";
    Node node(config);
    node.addFace(1, "p1", FaceKind::Network);
    node.addFace(2, "c1", FaceKind::Network);
    node.addFace(3, "c2", FaceKind::Network);
    node.fib().addRoute(Name::parse("/node/gps1"), 1);
    const std::string query = "FILTER(WINDOW(GPS_S1, 4s),'latitude'<50)";
    Timestamp newest = 0;
    Timestamp clock = 0;
    for (int step = 0; step < 400; ++step) {
      auto roll = rng.next() % 10;
      if (roll < 6) {
        clock += 1000;
        double latitude = rng.next() % 3 == 0 ? 51.0 : 49.5;
        Tuple t{clock, "gps", {static_cast<double>(clock), std::string("s1"), latitude, 8.6, 0.0, 0.0, 0.0, 0.0}};
        node.handle(1, DataStream{Name::parse("/node/gps1"), t});
        newest = clock;
      }
      else if (roll < 9) {
        FaceId face = static_cast<FaceId>(2 + rng.next() % 2);
        auto out = node.handle(face, AddQueryInterest{query, face});
        ++adds;
        for (const auto& s : out.sends) {
          if (s.face != face) {
            continue;
          }
          Timestamp ts = -1;
          if (const auto* d = std::get_if<Data>(&s.packet)) {
            ts = d->ts;
          }
          else if (const auto* ds = std::get_if<DataStream>(&s.packet)) {
            ts = ds->tuple.ts;
          }
          else {
            continue;
          }
          ++answered;
          if (ts < newest) {
            v.require(false, "seed " + std::to_string(seed) + " step " + std::to_string(step) + " returned ts " +
                               std::to_string(ts) + " < newest " + std::to_string(newest));
            return v;
          }
        }
      }
      else {
        FaceId face = static_cast<FaceId>(2 + rng.next() % 2);
        node.handle(face, RemoveQueryInterest{query, face});
      }
    }
  }
  v.note("adds=" + std::to_string(adds) + " answered=" + std::to_string(answered));
  v.require(answered > 0, "no add was ever answered");
  return v;
}

// 4

Verdict
pipelines()
{
  Verdict v;
  for (const std::string preset : {"centralized", "distributed"}) {
    Metrics merged;
    for (int i = 1; i <= 6; ++i) {
      auto id = "q" + std::to_string(i);
      auto r = run_scenario(load_scenario(SOURCE_DIR + "/scenarios/" + id + "-" + preset + ".scn"));
      const auto* q = r.metrics.query(id);
      v.require(q != nullptr && !q->notifications.empty(), preset + " " + id + " produced no result");
      if (q != nullptr) {
        merged.queries.push_back(*q);
      }
    }
    std::ostringstream csv;
    write_metrics_csv(csv, merged);
    std::istringstream in(csv.str());
    auto rows = read_metrics_csv(in);
    v.require(rows.size() == 6, preset + " CSV does not have 6 rows");
    if (rows.size() != 6) {
      continue;
    }
    double low = INFINITY;
    double high = -INFINITY;
    for (std::size_t i = 0; i < 6; ++i) {
      const auto& r = rows[i];
      v.require(r.query == "q" + std::to_string(i + 1), preset + " rows out of order");
      v.require(std::isfinite(r.values[0]), preset + " " + r.query + " total is not finite");
      v.require(std::abs(r.values[0] - (r.values[1] + r.values[2] + r.values[3])) < 1e-9,
                preset + " " + r.query + " total != graph + placement + communication");
      if (i < 3) {
        high = std::max(high, r.values[0]);
      }
      else {
        low = std::min(low, r.values[0]);
      }
    }
    v.note(preset + " max(Q1-3)=" + fixed(high) + " min(Q4-6)=" + fixed(low));
    v.require(low > high, preset + " Queries 4-6 are not slower than Queries 1-3");
  }
  return v;
}

// 5

Verdict
equivalence()
{
  Verdict v;
  std::size_t total = 0;
  for (int i = 1; i <= 6; ++i) {
    auto id = "q" + std::to_string(i);
    auto c = run_scenario(load_scenario(SOURCE_DIR + "/scenarios/" + id + "-centralized.scn"));
    auto d = run_scenario(load_scenario(SOURCE_DIR + "/scenarios/" + id + "-distributed.scn"));
    const auto& nc = c.metrics.query(id)->notifications;
    const auto& nd = d.metrics.query(id)->notifications;
    bool same = nc.size() == nd.size();
    for (std::size_t k = 0; same && k < nc.size(); ++k) {
      same = nc[k].ts == nd[k].ts && nc[k].payload == nd[k].payload;
    }
    v.require(!nc.empty(), id + " produced no notifications");
    v.require(same, id + " sequences differ (" + std::to_string(nc.size()) + " vs " + std::to_string(nd.size()) + ")");
    total += nc.size();
  }
  v.note("compared " + std::to_string(total) + " notifications over 6 queries");
  return v;
}

// 6

Relation
keyed(const std::string& qualifier, const std::vector<std::pair<Timestamp, double>>& rows)
{
  Relation r;
  r.columns = {Column{qualifier, "ts"}, Column{qualifier, "a"}};
  for (const auto& [ts, a] : rows) {
    r.rows.push_back({static_cast<double>(ts), a});
  }
  return r;
}

Verdict
operator_oracles()
{
  Verdict v;
  SeededRandom rng(606);

  auto num = [](const Row& row, std::size_t i) { return std::get<double>(row[i]); };
  std::vector<std::pair<BoolExpr, std::function<bool(const Row&)>>> cases{
    {BoolExpr::compare(AttributeRef{"L", "ts"}, CompareOp::Eq, AttributeRef{"R", "ts"}),
     [&](const Row& x) { return num(x, 0) == num(x, 2); }},
    {BoolExpr::compare(AttributeRef{"L", "a"}, CompareOp::Lt, AttributeRef{"R", "a"}),
     [&](const Row& x) { return num(x, 1) < num(x, 3); }},
  };
  std::size_t joins = 0;
  for (std::size_t nl = 0; nl <= 8; ++nl) {
    for (std::size_t nr = 0; nr <= 8; ++nr) {
      std::vector<std::pair<Timestamp, double>> lrows;
      std::vector<std::pair<Timestamp, double>> rrows;
      for (std::size_t i = 0; i < nl; ++i) {
        lrows.emplace_back(static_cast<Timestamp>(rng.next() % 5), static_cast<double>(rng.next() % 6));
      }
      for (std::size_t i = 0; i < nr; ++i) {
        rrows.emplace_back(static_cast<Timestamp>(rng.next() % 5), static_cast<double>(rng.next() % 6));
      }
      auto l = keyed("L", lrows);
      auto r = keyed("R", rrows);
      for (const auto& [expr, pred] : cases) {
        ++joins;
        v.require(join_eval(l, r, expr).rows == oracle::nested_loop_join(l, r, pred),
                  "join differs at " + std::to_string(nl) + "x" + std::to_string(nr));
      }
    }
  }

  Bounds area{49.8, 49.95, 8.55, 8.75};
  std::vector<std::pair<double, double>> points;
  for (int i = 0; i < 1000; ++i) {
    points.emplace_back(rng.uniform(49.78, 49.97), rng.uniform(8.53, 8.77));
  }
  auto grid = heatmap_eval(points, 0.025, area);
  auto want = oracle::bin_points(points, 0.025, area);
  v.require(grid.grid == want.grid && grid.skipped == want.outside, "heat map differs from binning oracle");
  v.require(grid.total() + grid.skipped == 1000, "heat map loses points");

  double worst = 0;
  AttributeRef a{"", "a"};
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::pair<Timestamp, double>> rows;
    std::size_t n = 1 + rng.next() % 64;
    for (std::size_t k = 0; k < n; ++k) {
      rows.emplace_back(static_cast<Timestamp>(k), rng.uniform(-1000, 1000));
    }
    auto r = keyed("", rows);
    double sum = aggregate_eval(AggKind::Sum, a, r);
    double prod = aggregate_eval(AggKind::Avg, a, r) * aggregate_eval(AggKind::Count, a, r);
    worst = std::max(worst, std::abs(prod - sum) / std::max(1.0, std::abs(sum)));
  }
  v.require(worst <= 1e-9, "AVG*COUNT differs from SUM by " + std::to_string(worst));

  std::size_t predictions = 0;
  std::vector<std::function<double(Timestamp)>> loads{
    [](Timestamp) { return 17.5; },
    [](Timestamp ts) { return 3 + 0.0005 * static_cast<double>(ts); },
  };
  for (auto mode : {CombineMode::Literal, CombineMode::Halved}) {
    for (const auto& load : loads) {
      auto run = oracle::run_plug(mode, load, 3'600'000);
      v.require(run.predictions.size() == 12, "expected 12 predictions per hour");
      for (const auto& p : run.predictions) {
        double expect = oracle::expected_prediction(mode, load, p.ts);
        ++predictions;
        v.require(std::abs(p.predictedLoad - expect) <= 1e-9 * std::abs(expect),
                  "prediction at " + std::to_string(p.ts) + " differs from arithmetic");
      }
    }
  }
  v.note(std::to_string(joins) + " joins, 1000 binned points, 1000 aggregates, " + std::to_string(predictions) +
         " predictions");
  return v;
}

// 7

Verdict
path_optimality()
{
  Verdict v;
  SeededRandom rng(707);
  std::size_t reachable = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 2 + static_cast<int>(rng.next() % 6);
    auto g = oracle::random_graph(rng, n, 0.45);
    const auto& from = g.nodes[rng.next() % n];
    const auto& to = g.nodes[rng.next() % n];
    double want = oracle::brute_force_min_cost(g, from, to);
    auto delays = g.delays();
    if (std::isinf(want)) {
      bool threw = false;
      try {
        build_path(delays, {from}, to);
      }
      catch (const NoPath&) {
        threw = true;
      }
      v.require(threw, "graph " + std::to_string(i) + " found a path where none exists");
      continue;
    }
    ++reachable;
    double got = route_cost(delays, build_path(delays, {from}, to));
    v.require(got == want, "graph " + std::to_string(i) + " cost " + std::to_string(got) + " vs " +
                             std::to_string(want));
  }
  v.note("200 graphs, " + std::to_string(reachable) + " with a path");
  return v;
}

// 8

Verdict
query_load()
{
  Verdict v;
  double previous = -INFINITY;
  std::string means;
  for (int count = 10; count <= 50; count += 10) {
    std::string text = "topology preset:distributed\n"
                       "seed 7\n"
                       "stream GPS_S1 p1 /node/p1/gps gps ../data/gps1.csv\n"
                       "stream GPS_S2 p2 /node/p2/gps gps ../data/gps2.csv offset=500\n";
    for (int k = 0; k < count; ++k) {
      auto threshold = std::to_string(50 + k);
      text += "query q" + std::to_string(k) + " b" + std::to_string(1 + k % 5) + " " + std::to_string(10 * k) +
              " 60000 distributed JOIN(FILTER(WINDOW(GPS_S1, 4s), 'latitude'<" + threshold +
              "), FILTER(WINDOW(GPS_S2, 4s), 'latitude'<" + threshold + "), GPS_S1.'ts' = GPS_S2.'ts')\n";
    }
    auto r = run_scenario(scenario_text(text));
    double sum = 0;
    std::map<NodeId, std::size_t> load;
    std::set<NodeId> eligible;
    std::size_t operators = 0;
    for (const auto& q : r.metrics.queries) {
      sum += q.totalMs;
      for (const auto& [node, n] : q.operatorCounts) {
        load[node] += n;
        operators += n;
      }
      auto plan = nlohmann::json::parse(q.plan);
      for (const auto& b : plan["trunk"]) {
        eligible.insert(b.get<std::string>());
      }
      for (const auto& [_, branch] : plan["branches"].items()) {
        for (const auto& b : branch) {
          eligible.insert(b.get<std::string>());
        }
      }
    }
    double mean = sum / static_cast<double>(r.metrics.queries.size());
    means += (means.empty() ? "" : " ") + std::to_string(count) + ":" + fixed(mean);
    v.require(std::isfinite(mean), std::to_string(count) + " queries gave a non-finite mean");
    v.require(mean >= previous, "mean total dropped at " + std::to_string(count) + " queries");
    previous = mean;

    std::size_t bound = (operators + eligible.size() - 1) / eligible.size();
    std::size_t lo = SIZE_MAX;
    std::size_t hi = 0;
    for (const auto& b : eligible) {
      lo = std::min(lo, load[b]);
      hi = std::max(hi, load[b]);
    }
    v.require(hi - lo <= bound, std::to_string(count) + " queries: spread " + std::to_string(hi - lo) +
                                  " exceeds " + std::to_string(bound));
  }
  v.note("mean total_ms " + means);
  return v;
}

// 9

Verdict
fuzz()
{
  Verdict v;
  SeededRandom rng(909);
  std::size_t rejected = 0;
  for (int i = 0; i < 10'000; ++i) {
    std::vector<std::uint8_t> bytes(rng.next() % 96);
    for (auto& b : bytes) {
      b = static_cast<std::uint8_t>(rng.next());
    }
    if (i % 2 == 1 && !bytes.empty()) {
      auto valid = encode_packet(gen::packet(rng));
      bytes.assign(valid.begin(), valid.end());
      bytes[rng.next() % bytes.size()] ^= static_cast<std::uint8_t>(1 + rng.next() % 255);
    }
    try {
      decode_packet(bytes);
    }
    catch (const MalformedPacket&) {
      ++rejected;
    }
    catch (const std::exception& e) {
      v.require(false, std::string("decode_packet raised ") + e.what());
      return v;
    }
  }
  std::size_t queryErrors = 0;
  for (int i = 0; i < 1000; ++i) {
    auto text = gen::mutate(rng, gen::query(rng));
    try {
      parse_query(text);
    }
    catch (const QueryError&) {
      ++queryErrors;
    }
    catch (const std::exception& e) {
      v.require(false, "parse_query raised a non-query error on '" + text + "': " + e.what());
      return v;
    }
  }
  v.note("10000 byte strings (" + std::to_string(rejected) + " rejected), 1000 mutated queries (" +
         std::to_string(queryErrors) + " rejected)");
  return v;
}

} // namespace
} // namespace cepnet

int
main()
{
  using namespace cepnet;
  struct Criterion
  {
    int number;
    const char* title;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
    {1, "parser scaling", parser_scaling},
    {2, "push economy", push_economy},
    {3, "freshness", freshness},
    {4, "query pipelines and metrics", pipelines},
    {5, "centralized/distributed equivalence", equivalence},
    {6, "operator oracles", operator_oracles},
    {7, "path optimality", path_optimality},
    {8, "query-load scaling", query_load},
    {9, "fuzz robustness", fuzz},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    }
    catch (const std::exception& e) {
      v.require(false, std::string("threw: ") + e.what());
    }
    failed += v.pass ? 0 : 1;
    std::cout << (v.pass ? "PASS" : "FAIL") << ' ' << c.number << ' ' << c.title << ": " << v.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
