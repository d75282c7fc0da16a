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

#include "cepnet/operators/evaluators.hpp"
#include "cepnet/operators/query-runtime.hpp"
#include "cepnet/operators/relational.hpp"
#include "cepnet/operators/window.hpp"
#include "cepnet/query/nfn.hpp"
#include "cepnet/query/parser.hpp"

#include "support/oracles.hpp"
#include "support/predict-harness.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace cepnet {
namespace {

Tuple
at(Timestamp ts)
{
  return Tuple{ts, "gps", {static_cast<double>(ts), std::string("s1"), 49.5, 8.6, 0.0, 0.0, 0.0, 0.0}};
}

BoolExpr
cmp(const std::string& attr, CompareOp op, double value)
{
  return BoolExpr::compare(AttributeRef{"", attr}, op, NumberLit{value, std::to_string(value)});
}

BoolExpr
both(BoolExpr a, BoolExpr b)
{
  return BoolExpr::combine(BoolExpr::Kind::And, std::move(a), std::move(b));
}

BoolExpr
either(BoolExpr a, BoolExpr b)
{
  return BoolExpr::combine(BoolExpr::Kind::Or, std::move(a), std::move(b));
}

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

TEST(Window, EvictsByExtent)
{
  WindowState s;
  s.extent = WindowExtent::time(4000);
  s.insert(at(1000));
  s.insert(at(2000));
  auto kept = window_insert(s, at(4500));
  EXPECT_TRUE(kept.evicted.empty());
  EXPECT_EQ(kept.state.buffer.size(), 3u);
  auto [state, evicted] = window_insert(s, at(5000));
  ASSERT_EQ(evicted.size(), 1u);
  EXPECT_EQ(evicted[0].ts, 1000);
  ASSERT_EQ(state.buffer.size(), 2u);
  EXPECT_EQ(state.buffer[0].ts, 2000);
  EXPECT_EQ(state.buffer[1].ts, 5000);
}

TEST(Window, EmptyInsertAndOutOfOrder)
{
  WindowState s;
  s.extent = WindowExtent::time(4000);
  auto [state, evicted] = window_insert(s, at(10));
  EXPECT_TRUE(evicted.empty());
  EXPECT_EQ(state.buffer.size(), 1u);
  EXPECT_THROW(window_insert(state, at(5)), OutOfOrderTuple);
  EXPECT_NO_THROW(window_insert(state, at(10)));
}

TEST(Window, CountExtent)
{
  WindowState s;
  s.extent = WindowExtent::count(3);
  for (Timestamp ts = 1; ts <= 10; ++ts) {
    s.insert(at(ts));
    EXPECT_LE(s.buffer.size(), 3u);
  }
  EXPECT_EQ(s.buffer.front().ts, 8);
}

TEST(Window, ConservationAndInvariants)
{
  SeededRandom rng(9);
  for (auto extent : {WindowExtent::time(2500), WindowExtent::count(4)}) {
    WindowState s;
    s.extent = extent;
    std::multiset<Timestamp> inserted;
    std::multiset<Timestamp> evicted;
    Timestamp ts = 0;
    for (int i = 0; i < 2000; ++i) {
      ts += static_cast<Timestamp>(rng.next() % 1500);
      inserted.insert(ts);
      for (const auto& e : s.insert(at(ts))) {
        evicted.insert(e.ts);
      }
      std::multiset<Timestamp> held;
      for (std::size_t k = 0; k < s.buffer.size(); ++k) {
        held.insert(s.buffer[k].ts);
        if (k > 0) {
          ASSERT_LE(s.buffer[k - 1].ts, s.buffer[k].ts);
        }
        if (extent.kind == WindowExtent::Kind::Time) {
          ASSERT_LT(s.buffer.back().ts - s.buffer[k].ts, extent.amount);
        }
      }
      if (extent.kind == WindowExtent::Kind::Count) {
        ASSERT_LE(s.buffer.size(), static_cast<std::size_t>(extent.amount));
      }
      std::multiset<Timestamp> both = held;
      both.insert(evicted.begin(), evicted.end());
      ASSERT_EQ(both, inserted);
    }
  }
}

TEST(Filter, LatitudeListing)
{
  Relation r;
  r.columns = columns_of(gps_schema(), "GPS_S1");
  Tuple a = at(1);
  Tuple b = at(2);
  b.values[2] = 50.2;
  r = relation_from_tuples(r.columns, {a, b});
  auto out = filter_eval(r, cmp("latitude", CompareOp::Lt, 50));
  ASSERT_EQ(out.rows.size(), 1u);
  EXPECT_EQ(out.rows[0][2], Value(49.5));
}

TEST(Filter, UnsatisfiableAndUnionOracle)
{
  SeededRandom rng(4);
  Relation r;
  r.columns = {Column{"", "ts"}, Column{"", "a"}, Column{"", "b"}};
  for (int i = 0; i < 300; ++i) {
    r.rows.push_back({static_cast<double>(i), static_cast<double>(rng.next() % 12), static_cast<double>(rng.next() % 4)});
  }
  EXPECT_TRUE(filter_eval(r, both(cmp("a", CompareOp::Lt, 5), cmp("a", CompareOp::Gt, 10))).rows.empty());
  auto got = filter_eval(r, either(cmp("a", CompareOp::Eq, 1), cmp("b", CompareOp::Eq, 2)));
  std::vector<Row> want;
  for (const auto& row : r.rows) {
    if (std::get<double>(row[1]) == 1 || std::get<double>(row[2]) == 2) {
      want.push_back(row);
    }
  }
  EXPECT_EQ(got.rows, want);
}

TEST(Filter, Idempotent)
{
  SeededRandom rng(6);
  Relation r;
  r.columns = {Column{"", "ts"}, Column{"", "a"}, Column{"", "b"}};
  for (int i = 0; i < 200; ++i) {
    r.rows.push_back({static_cast<double>(i), rng.uniform(0, 10), rng.uniform(0, 10)});
  }
  std::vector<BoolExpr> conds{
    cmp("a", CompareOp::Lt, 5),
    both(cmp("a", CompareOp::Gt, 2), cmp("b", CompareOp::Le, 7)),
    either(cmp("a", CompareOp::Ge, 9), cmp("b", CompareOp::Lt, 1)),
  };
  for (const auto& c : conds) {
    auto once = filter_eval(r, c);
    EXPECT_EQ(filter_eval(once, c), once) << render(c);
  }
}

TEST(Join, TwoByTwoOnEqualTs)
{
  auto left = relation_from_tuples(columns_of(gps_schema(), "GPS_S1"), {at(1000), at(2000)});
  Tuple r1 = at(1000);
  Tuple r2 = at(2000);
  r1.values[2] = 49.6;
  r2.values[2] = 49.7;
  auto right = relation_from_tuples(columns_of(gps_schema(), "GPS_S2"), {r1, r2});
  auto tree = parse_query("JOIN(WINDOW(GPS_S1, 2s), WINDOW(GPS_S2, 2s), GPS_S1.'ts' = GPS_S2.'ts')");
  auto out = join_eval(left, right, std::get<BoolExpr>(tree.params.at(0)));
  ASSERT_EQ(out.rows.size(), 2u);
  EXPECT_EQ(out.rows[0].size(), 15u);
  EXPECT_EQ(out.rows[0][2], Value(49.5));
  EXPECT_EQ(out.rows[0][9], Value(49.6));
  EXPECT_EQ(out.rows[1][9], Value(49.7));
}

TEST(Join, EmptySideAndTautology)
{
  auto l = keyed("L", {{1, 1}, {2, 2}, {3, 3}});
  auto r = keyed("R", {{1, 5}, {4, 6}});
  auto empty = keyed("R", {});
  BoolExpr taut = BoolExpr::compare(AttributeRef{"L", "ts"}, CompareOp::Ge, NumberLit{0, "0"});
  EXPECT_TRUE(join_eval(l, empty, taut).rows.empty());
  EXPECT_TRUE(join_eval(empty, l, taut).rows.empty());
  EXPECT_EQ(join_eval(l, r, taut).rows.size(), 6u);
}

TEST(Join, ExhaustiveAgainstNestedLoop)
{
  SeededRandom rng(8);
  struct Case
  {
    BoolExpr expr;
    std::function<bool(const Row&)> pred;
  };
  auto num = [](const Row& row, std::size_t i) { return std::get<double>(row[i]); };
  std::vector<Case> cases{
    {BoolExpr::compare(AttributeRef{"L", "ts"}, CompareOp::Eq, AttributeRef{"R", "ts"}),
     [&](const Row& x) { return num(x, 0) == num(x, 2); }},
    {BoolExpr::compare(AttributeRef{"L", "a"}, CompareOp::Lt, AttributeRef{"R", "a"}),
     [&](const Row& x) { return num(x, 1) < num(x, 3); }},
    {BoolExpr::combine(BoolExpr::Kind::Or,
                       BoolExpr::compare(AttributeRef{"L", "a"}, CompareOp::Ge, NumberLit{3, "3"}),
                       BoolExpr::compare(AttributeRef{"R", "ts"}, CompareOp::Le, NumberLit{2, "2"})),
     [&](const Row& x) { return num(x, 1) >= 3 || num(x, 2) <= 2; }},
    {BoolExpr::compare(AttributeRef{"L", "ts"}, CompareOp::Ge, NumberLit{0, "0"}), [](const Row&) { return true; }},
  };
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
      for (const auto& c : cases) {
        auto got = join_eval(l, r, c.expr);
        ASSERT_EQ(got.rows, oracle::nested_loop_join(l, r, c.pred)) << nl << "x" << nr << " " << render(c.expr);
        if (c.pred(Row{0.0, 0.0, 0.0, 0.0}) && render(c.expr) == "L.'ts'>=0") {
          ASSERT_EQ(got.rows.size(), nl * nr);
        }
      }
    }
  }
}

TEST(Aggregate, Examples)
{
  auto r = keyed("", {{1, 1}, {2, 2}, {3, 3}});
  AttributeRef a{"", "a"};
  EXPECT_EQ(aggregate_eval(AggKind::Sum, a, r), 6);
  EXPECT_EQ(aggregate_eval(AggKind::Avg, a, keyed("", {{1, 2}, {2, 4}})), 3);
  auto empty = keyed("", {});
  EXPECT_EQ(aggregate_eval(AggKind::Count, a, empty), 0);
  EXPECT_THROW(aggregate_eval(AggKind::Min, a, empty), EmptyWindow);
  EXPECT_THROW(aggregate_eval(AggKind::Sum, AttributeRef{"", "zz"}, r), UnknownAttribute);
  EXPECT_EQ(aggregate_eval(AggKind::Min, a, r), 1);
  EXPECT_EQ(aggregate_eval(AggKind::Max, a, r), 3);
}

TEST(Aggregate, AvgTimesCountIsSum)
{
  SeededRandom rng(12);
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
    ASSERT_LE(std::abs(prod - sum), 1e-9 * std::max(1.0, std::abs(sum)));
  }
}

TEST(Sequence, StrictOrder)
{
  EXPECT_TRUE(sequence_eval(keyed("", {{1, 0}}), keyed("", {{2, 0}})));
  EXPECT_FALSE(sequence_eval(keyed("", {{2, 0}}), keyed("", {{1, 0}})));
  EXPECT_FALSE(sequence_eval(keyed("", {{3, 0}}), keyed("", {{3, 0}})));
  EXPECT_FALSE(sequence_eval(keyed("", {}), keyed("", {{3, 0}})));
}

TEST(Sequence, MatchesPairScan)
{
  SeededRandom rng(13);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::pair<Timestamp, double>> a;
    std::vector<std::pair<Timestamp, double>> b;
    for (std::size_t k = rng.next() % 5; k > 0; --k) {
      a.emplace_back(static_cast<Timestamp>(rng.next() % 10), 0);
    }
    for (std::size_t k = rng.next() % 5; k > 0; --k) {
      b.emplace_back(static_cast<Timestamp>(rng.next() % 10), 0);
    }
    bool want = false;
    for (const auto& x : a) {
      for (const auto& y : b) {
        want = want || x.first < y.first;
      }
    }
    ASSERT_EQ(sequence_eval(keyed("", a), keyed("", b)), want);
  }
}

TEST(Heatmap, CellCountsAndOrigin)
{
  Bounds unit{0, 1, 0, 1};
  auto grid = heatmap_eval({{0.0, 0.0}}, 0.25, unit);
  EXPECT_EQ(grid.hc, 4);
  EXPECT_EQ(grid.vc, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      EXPECT_EQ(grid.grid[r][c], r == 0 && c == 0 ? 1 : 0);
    }
  }
  EXPECT_THROW(make_heat_grid(0, unit), DegenerateBounds);
  EXPECT_THROW(make_heat_grid(0.5, Bounds{1, 1, 0, 1}), DegenerateBounds);
}

TEST(Heatmap, RowIsLatitude)
{
  auto grid = heatmap_eval({{0.9, 0.1}}, 0.5, Bounds{0, 1, 0, 1});
  EXPECT_EQ(grid.grid[1][0], 1);
}

TEST(Heatmap, MatchesBinningOracle)
{
  SeededRandom rng(21);
  Bounds area{49.8, 49.95, 8.55, 8.75};
  for (double cell : {0.01, 0.025, 0.03}) {
    std::vector<std::pair<double, double>> points;
    for (int i = 0; i < 1000; ++i) {
      points.emplace_back(rng.uniform(49.78, 49.97), rng.uniform(8.53, 8.77));
    }
    auto grid = heatmap_eval(points, cell, area);
    auto want = oracle::bin_points(points, cell, area);
    EXPECT_EQ(grid.grid, want.grid) << cell;
    EXPECT_EQ(grid.skipped, want.outside);
    EXPECT_EQ(grid.total() + grid.skipped, 1000);
  }
}

TEST(Predict, CombineVariants)
{
  double med = median({8, 12, 10});
  EXPECT_EQ(med, 10);
  EXPECT_EQ(combine(10, med, CombineMode::Literal), 20);
  EXPECT_EQ(combine(10, med, CombineMode::Halved), 10);
  EXPECT_EQ(median({1, 4, 2, 3}), 2.5);
  EXPECT_THROW(median({}), Error);
  EXPECT_EQ(parse_combine_mode("halved"), CombineMode::Halved);
  EXPECT_THROW(parse_combine_mode("mean"), Error);
}

TEST(Predict, ConstantAndRampMatchArithmetic)
{
  std::vector<std::pair<std::string, std::function<double(Timestamp)>>> loads{
    {"constant", [](Timestamp) { return 17.5; }},
    {"ramp", [](Timestamp ts) { return 3 + 0.0005 * static_cast<double>(ts); }},
  };
  for (auto mode : {CombineMode::Literal, CombineMode::Halved}) {
    for (const auto& [label, load] : loads) {
      auto run = oracle::run_plug(mode, load, 3'600'000);
      ASSERT_EQ(run.predictions.size(), 12u) << label;
      for (std::size_t i = 0; i < run.predictions.size(); ++i) {
        const auto& p = run.predictions[i];
        EXPECT_EQ(p.ts, static_cast<Timestamp>(300'000 * (i + 1)));
        double want = oracle::expected_prediction(mode, load, p.ts);
        EXPECT_NEAR(p.predictedLoad, want, 1e-9 * std::abs(want)) << label << " epoch " << p.ts;
        EXPECT_EQ(p.plugId, Value(7.0));
      }
    }
  }
}

TEST(Predict, ConstantLoadSteadyState)
{
  auto flat = [](Timestamp) { return 12.0; };
  auto literal = oracle::run_plug(CombineMode::Literal, flat, 1'800'000);
  auto halved = oracle::run_plug(CombineMode::Halved, flat, 1'800'000);
  EXPECT_EQ(literal.predictions.front().predictedLoad, 12.0);
  EXPECT_EQ(literal.predictions.back().predictedLoad, 24.0);
  EXPECT_EQ(halved.predictions.back().predictedLoad, 12.0);
}

TEST(Runtime, ListingJoinMatchesOracle)
{
  auto tree = create_operator_graph(
    "JOIN(FILTER(WINDOW(GPS_S1, 4s), 'latitude'<50), FILTER(WINDOW(GPS_S2, 4s), 'latitude'<50), "
    "GPS_S1.'ts' = GPS_S2.'ts')");
  QueryRuntime rt(tree, {0, 1, 2, 3, 4}, EvalContext{});
  auto s1 = Name::parse("/node/gps1");
  auto s2 = Name::parse("/node/gps2");
  SeededRandom rng(30);
  std::vector<Tuple> w1;
  std::vector<Tuple> w2;
  for (Timestamp ts = 1000; ts <= 30'000; ts += 1000) {
    for (int side = 0; side < 2; ++side) {
      Tuple t = at(ts);
      t.values[2] = rng.uniform(49.9, 50.1);
      auto& w = side == 0 ? w1 : w2;
      w.push_back(t);
      std::erase_if(w, [&](const Tuple& x) { return ts - x.ts >= 4000; });
      rt.onTuple(side == 0 ? s1 : s2, t);

      std::vector<std::pair<Timestamp, double>> want;
      for (const auto& a : w1) {
        for (const auto& b : w2) {
          if (a.ts == b.ts && std::get<double>(a.values[2]) < 50 && std::get<double>(b.values[2]) < 50) {
            want.emplace_back(a.ts, std::get<double>(b.values[2]));
          }
        }
      }
      const Relation* got = rt.result(0);
      std::vector<std::pair<Timestamp, double>> have;
      if (got != nullptr) {
        for (const auto& row : got->rows) {
          have.emplace_back(row_ts(row), std::get<double>(row[9]));
        }
      }
      ASSERT_EQ(have, want) << "ts " << ts << " side " << side;
    }
  }
}

TEST(Runtime, UnchangedResultDoesNotPropagate)
{
  auto tree = create_operator_graph("FILTER(WINDOW(GPS_S1, 4s), 'latitude'<50)");
  QueryRuntime rt(tree, {0, 1}, EvalContext{});
  auto s1 = Name::parse("/node/gps1");
  EXPECT_EQ(rt.onTuple(s1, at(1000)).size(), 1u);
  Tuple high = at(2000);
  high.values[2] = 51.0;
  EXPECT_TRUE(rt.onTuple(s1, high).empty());
  EXPECT_EQ(rt.lastEvaluatedKinds(), (std::vector<std::string>{"WINDOW", "FILTER"}));
}

TEST(Runtime, SplitFragmentsAgreeWithWhole)
{
  const char* q = "JOIN(FILTER(WINDOW(GPS_S1, 4s), 'latitude'<50), FILTER(WINDOW(GPS_S2, 4s), 'latitude'<50), "
                  "GPS_S1.'ts' = GPS_S2.'ts')";
  auto tree = create_operator_graph(q);
  QueryRuntime whole(tree, {0, 1, 2, 3, 4}, EvalContext{});
  QueryRuntime left(tree, {1, 2}, EvalContext{});
  QueryRuntime right(tree, {3, 4}, EvalContext{});
  QueryRuntime top(tree, {0}, EvalContext{});
  EXPECT_EQ(top.remoteInputs(), (std::vector<int>{1, 3}));
  EXPECT_EQ(left.outputs(), (std::vector<int>{1}));
  SeededRandom rng(31);
  std::vector<Relation> fromWhole;
  std::vector<Relation> fromSplit;
  for (Timestamp ts = 1000; ts <= 20'000; ts += 1000) {
    for (int side = 0; side < 2; ++side) {
      Tuple t = at(ts);
      t.values[2] = rng.uniform(49.9, 50.1);
      Name stream = Name::parse(side == 0 ? "/node/gps1" : "/node/gps2");
      for (const auto& o : whole.onTuple(stream, t)) {
        fromWhole.push_back(o.relation);
      }
      for (const auto& o : (side == 0 ? left : right).onTuple(stream, t)) {
        for (const auto& r : top.onIntermediate(o.index, o.relation, o.trigger)) {
          fromSplit.push_back(r.relation);
        }
      }
    }
  }
  EXPECT_FALSE(fromWhole.empty());
  EXPECT_EQ(fromSplit, fromWhole);
}

TEST(Registry, CustomOperatorPlugsIn)
{
  OperatorRegistry ops = OperatorRegistry::makeBuiltin();
  OperatorSpec head;
  head.keyword = "HEAD";
  head.service = "Head";
  head.signature = {Slot::Child, Slot::Scalar};
  head.output = [](const OperatorNode& n, const Catalog&) { return n.children.at(0).output; };
  ops.add(head);
  EXPECT_THROW(ops.add(head), Error);

  class HeadEvaluator : public Evaluator
  {
  public:
    explicit HeadEvaluator(std::size_t n)
      : m_n(n)
    {
    }
    Relation
    evaluate(const std::vector<const Relation*>& in) override
    {
      Relation r = *in.at(0);
      r.rows.resize(std::min(r.rows.size(), m_n));
      return r;
    }

  private:
    std::size_t m_n;
  };
  EvaluatorRegistry evals = EvaluatorRegistry::makeBuiltin();
  evals.add("HEAD", [](const OperatorNode& n, const EvalContext&) {
    return std::make_unique<HeadEvaluator>(static_cast<std::size_t>(std::get<NumberLit>(n.params.at(0)).value));
  });

  auto tree = parse_query("head(WINDOW(GPS_S1, 4s), 2)", Catalog::defaults(), ops);
  refresh_nfn(tree, ops);
  EXPECT_EQ(tree.nfn.rfind("(call 3 /node/nodeQuery/nfn_service_Head", 0), 0u);
  QueryRuntime rt(tree, {0, 1}, EvalContext{}, evals);
  auto s1 = Name::parse("/node/gps1");
  for (Timestamp ts = 1000; ts <= 3000; ts += 1000) {
    rt.onTuple(s1, at(ts));
  }
  ASSERT_NE(rt.result(0), nullptr);
  EXPECT_EQ(rt.result(0)->rows.size(), 2u);
  EXPECT_THROW(parse_query("head(WINDOW(GPS_S1, 4s), 2)"), SemanticError);
}

TEST(Relation, JsonRoundTrip)
{
  auto r = relation_from_tuples(columns_of(gps_schema(), "GPS_S1"), {at(1), at(2)});
  EXPECT_EQ(relation_from_json(relation_to_json(r)), r);
  EXPECT_THROW(relation_from_json("{"), Error);
}

} // namespace
} // namespace cepnet
