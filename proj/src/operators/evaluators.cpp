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
#include "cepnet/operators/heatmap.hpp"
#include "cepnet/operators/relational.hpp"
#include "cepnet/operators/window.hpp"

namespace cepnet {

void
Evaluator::ingest(const Tuple&)
{
  throw Error("operator does not consume raw stream tuples");
}

namespace {

class WindowEvaluator : public Evaluator
{
public:
  WindowEvaluator(const OperatorNode& node, const EvalContext& ctx)
    : m_columns(node.output)
  {
    m_state.queryHash = ctx.queryHash;
    m_state.operatorIndex = node.index;
    const Param& size = node.params.at(1);
    if (const auto* d = std::get_if<DurationLit>(&size)) {
      m_state.extent = WindowExtent::time(d->millis());
    }
    else {
      m_state.extent = WindowExtent::count(static_cast<std::int64_t>(std::get<NumberLit>(size).value));
    }
  }

  void
  ingest(const Tuple& t) override
  {
    m_state.insert(t);
  }

  Relation
  evaluate(const std::vector<const Relation*>&) override
  {
    m_work = m_state.buffer.size();
    return relation_from_tuples(m_columns, m_state.buffer);
  }

  std::optional<std::string>
  snapshot() const override
  {
    return relation_to_json(relation_from_tuples(m_columns, m_state.buffer));
  }

private:
  std::vector<Column> m_columns;
  WindowState m_state;
};

class FilterEvaluator : public Evaluator
{
public:
  explicit FilterEvaluator(const OperatorNode& node)
    : m_expr(std::get<BoolExpr>(node.params.at(0)))
  {
  }

  Relation
  evaluate(const std::vector<const Relation*>& in) override
  {
    m_work = in.at(0)->rows.size();
    return filter_eval(*in[0], m_expr);
  }

private:
  BoolExpr m_expr;
};

class JoinEvaluator : public Evaluator
{
public:
  explicit JoinEvaluator(const OperatorNode& node)
    : m_cond(std::get<BoolExpr>(node.params.at(0)))
  {
  }

  Relation
  evaluate(const std::vector<const Relation*>& in) override
  {
    m_work = in.at(0)->rows.size() * in.at(1)->rows.size() + in[0]->rows.size() + in[1]->rows.size();
    return join_eval(*in[0], *in[1], m_cond);
  }

private:
  BoolExpr m_cond;
};

class SequenceEvaluator : public Evaluator
{
public:
  explicit SequenceEvaluator(const OperatorNode& node)
    : m_columns(node.output)
  {
  }

  Relation
  evaluate(const std::vector<const Relation*>& in) override
  {
    const Relation& a = *in.at(0);
    const Relation& b = *in.at(1);
    m_work = a.rows.size() + b.rows.size();
    Relation out{m_columns, {}};
    auto ta = a.newestTs();
    auto tb = b.newestTs();
    if (!ta && !tb) {
      return out;
    }
    Timestamp ts = std::max(ta.value_or(*tb), tb.value_or(*ta));
    out.rows.push_back({static_cast<double>(ts), std::string(sequence_eval(a, b) ? "true" : "false")});
    return out;
  }

private:
  std::vector<Column> m_columns;
};

class AggregateEvaluator : public Evaluator
{
public:
  explicit AggregateEvaluator(const OperatorNode& node)
    : m_kind(parse_agg_kind(node.kind))
    , m_attr(std::get<AttributeRef>(node.params.at(0)))
    , m_columns(node.output)
  {
  }

  Relation
  evaluate(const std::vector<const Relation*>& in) override
  {
    const Relation& r = *in.at(0);
    m_work = r.rows.size();
    Relation out{m_columns, {}};
    if (r.empty()) {
      return out;
    }
    out.rows.push_back({static_cast<double>(*r.newestTs()), aggregate_eval(m_kind, m_attr, r)});
    return out;
  }

private:
  AggKind m_kind;
  AttributeRef m_attr;
  std::vector<Column> m_columns;
};

class HeatmapEvaluator : public Evaluator
{
public:
  HeatmapEvaluator(const OperatorNode& node, const EvalContext& ctx)
    : m_columns(node.output)
  {
    const Param& cs = node.params.at(0);
    if (const auto* n = std::get_if<NumberLit>(&cs)) {
      m_cellSize = n->value;
    }
    else {
      m_cellSize = std::get<double>(*ctx.catalog.findParam(std::get<Identifier>(cs).text));
    }
    m_bounds = std::get<Bounds>(*ctx.catalog.findParam(std::get<Identifier>(node.params.at(1)).text));
    make_heat_grid(m_cellSize, m_bounds);
  }

  Relation
  evaluate(const std::vector<const Relation*>& in) override
  {
    const Relation& r = *in.at(0);
    Relation out{m_columns, {}};
    if (r.empty()) {
      m_work = 0;
      return out;
    }
    HeatGrid g = heatmap_eval(r, m_cellSize, m_bounds);
    m_work = r.rows.size() + static_cast<std::size_t>(g.hc) * static_cast<std::size_t>(g.vc);
    out.rows.push_back({static_cast<double>(*r.newestTs()), static_cast<double>(g.hc),
                        static_cast<double>(g.vc), static_cast<double>(g.skipped), g.toCsv(';')});
    return out;
  }

private:
  std::vector<Column> m_columns;
  double m_cellSize = 0;
  Bounds m_bounds;
};

class PredictEvaluator : public Evaluator
{
public:
  PredictEvaluator(const OperatorNode& node, const EvalContext& ctx)
    : m_last{node.output, {}}
  {
    m_state.config.horizonMs = std::get<DurationLit>(node.params.at(0)).millis();
    m_state.config.slotMs = std::get<DurationLit>(node.children.at(0).params.at(1)).millis();
    m_state.config.periodMs = ctx.predictPeriodMs;
    m_state.config.mode = ctx.combine;
  }

  Relation
  evaluate(const std::vector<const Relation*>& in) override
  {
    const Relation& w = *in.at(0);
    m_work = w.rows.size();
    if (auto now = w.newestTs()) {
      if (auto p = predict_eval(m_state, w, *now)) {
        m_last.rows = {p->toRow()};
      }
    }
    return m_last;
  }

  std::optional<std::string>
  snapshot() const override
  {
    return relation_to_json(m_last);
  }

private:
  PredictState m_state;
  Relation m_last;
};

} // namespace

void
EvaluatorRegistry::add(const std::string& kind, EvaluatorFactory factory)
{
  if (!m_factories.emplace(kind, std::move(factory)).second) {
    throw Error("evaluator for " + kind + " is already registered");
  }
}

std::unique_ptr<Evaluator>
EvaluatorRegistry::create(const OperatorNode& node, const EvalContext& ctx) const
{
  auto it = m_factories.find(node.kind);
  if (it == m_factories.end()) {
    throw Error("no evaluator registered for " + node.kind);
  }
  return it->second(node, ctx);
}

bool
EvaluatorRegistry::contains(const std::string& kind) const
{
  return m_factories.count(kind) > 0;
}

EvaluatorRegistry
EvaluatorRegistry::makeBuiltin()
{
  EvaluatorRegistry r;
  r.add("WINDOW", [](const OperatorNode& n, const EvalContext& c) { return std::make_unique<WindowEvaluator>(n, c); });
  r.add("FILTER", [](const OperatorNode& n, const EvalContext&) { return std::make_unique<FilterEvaluator>(n); });
  r.add("JOIN", [](const OperatorNode& n, const EvalContext&) { return std::make_unique<JoinEvaluator>(n); });
  r.add("SEQUENCE", [](const OperatorNode& n, const EvalContext&) { return std::make_unique<SequenceEvaluator>(n); });
  for (const char* agg : {"SUM", "MIN", "MAX", "AVG", "COUNT"}) {
    r.add(agg, [](const OperatorNode& n, const EvalContext&) { return std::make_unique<AggregateEvaluator>(n); });
  }
  r.add("HEATMAP", [](const OperatorNode& n, const EvalContext& c) { return std::make_unique<HeatmapEvaluator>(n, c); });
  r.add("PREDICT", [](const OperatorNode& n, const EvalContext& c) { return std::make_unique<PredictEvaluator>(n, c); });
  return r;
}

const EvaluatorRegistry&
EvaluatorRegistry::builtin()
{
  static const EvaluatorRegistry r = makeBuiltin();
  return r;
}

} // namespace cepnet
