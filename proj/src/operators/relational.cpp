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

#include "cepnet/operators/relational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace cepnet {

BoundCondition::BoundCondition(const BoolExpr& expr, const std::vector<Column>& columns)
{
  m_root = bind(expr, columns);
}

std::size_t
BoundCondition::bind(const BoolExpr& e, const std::vector<Column>& columns)
{
  Node n{e.kind, {}, CompareOp::Eq, {}};
  if (e.kind == BoolExpr::Kind::Compare) {
    auto term = [&](const Operand& o) {
      if (const auto* a = std::get_if<AttributeRef>(&o)) {
        auto idx = resolve_attribute(columns, *a);
        if (!idx) {
          throw UnknownAttribute("unknown attribute " + render(*a));
        }
        return Term{true, *idx, 0};
      }
      return Term{false, 0, std::get<NumberLit>(o).value};
    };
    n.lhs = term(e.comparison.lhs);
    n.op = e.comparison.op;
    n.rhs = term(e.comparison.rhs);
  }
  else {
    n.left = bind(e.operands.at(0), columns);
    n.right = bind(e.operands.at(1), columns);
  }
  m_nodes.push_back(n);
  return m_nodes.size() - 1;
}

bool
BoundCondition::eval(std::size_t idx, const Row& row) const
{
  const Node& n = m_nodes[idx];
  switch (n.kind) {
    case BoolExpr::Kind::And: return eval(n.left, row) && eval(n.right, row);
    case BoolExpr::Kind::Or: return eval(n.left, row) || eval(n.right, row);
    case BoolExpr::Kind::Compare: break;
  }
  auto value = [&](const Term& t) -> Value {
    return t.isColumn ? row.at(t.column) : Value(t.number);
  };
  return compare_values(value(n.lhs), n.op, value(n.rhs));
}

bool
BoundCondition::operator()(const Row& row) const
{
  return eval(m_root, row);
}

namespace {

template<typename T>
bool
apply(const T& a, CompareOp op, const T& b)
{
  switch (op) {
    case CompareOp::Lt: return a < b;
    case CompareOp::Gt: return a > b;
    case CompareOp::Eq: return a == b;
    case CompareOp::Le: return a <= b;
    case CompareOp::Ge: return a >= b;
  }
  return false;
}

} // namespace

bool
compare_values(const Value& a, CompareOp op, const Value& b)
{
  if (a.index() != b.index()) {
    return false;
  }
  if (const double* x = std::get_if<double>(&a)) {
    return apply(*x, op, std::get<double>(b));
  }
  return apply(std::get<std::string>(a), op, std::get<std::string>(b));
}

Relation
filter_eval(const Relation& input, const BoolExpr& expr)
{
  BoundCondition cond(expr, input.columns);
  Relation out{input.columns, {}};
  std::copy_if(input.rows.begin(), input.rows.end(), std::back_inserter(out.rows), std::cref(cond));
  return out;
}

Relation
join_eval(const Relation& left, const Relation& right, const BoolExpr& cond)
{
  if (left.columns.empty() || right.columns.empty()) {
    throw Error("join inputs need a timestamp column");
  }
  std::vector<Column> scope = left.columns;
  scope.insert(scope.end(), right.columns.begin(), right.columns.end());
  BoundCondition bound(cond, scope);

  Relation out;
  out.columns = left.columns;
  out.columns.insert(out.columns.end(), right.columns.begin() + 1, right.columns.end());

  Row pair;
  for (const auto& l : left.rows) {
    for (const auto& r : right.rows) {
      pair.assign(l.begin(), l.end());
      pair.insert(pair.end(), r.begin(), r.end());
      if (!bound(pair)) {
        continue;
      }
      Row row;
      row.reserve(l.size() + r.size() - 1);
      row.emplace_back(static_cast<double>(std::max(row_ts(l), row_ts(r))));
      row.insert(row.end(), l.begin() + 1, l.end());
      row.insert(row.end(), r.begin() + 1, r.end());
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

AggKind
parse_agg_kind(std::string_view name)
{
  std::string u(name);
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
  if (u == "SUM") return AggKind::Sum;
  if (u == "MIN") return AggKind::Min;
  if (u == "MAX") return AggKind::Max;
  if (u == "AVG") return AggKind::Avg;
  if (u == "COUNT") return AggKind::Count;
  throw Error("unknown aggregate " + std::string(name));
}

const char*
to_string(AggKind kind) noexcept
{
  switch (kind) {
    case AggKind::Sum: return "SUM";
    case AggKind::Min: return "MIN";
    case AggKind::Max: return "MAX";
    case AggKind::Avg: return "AVG";
    case AggKind::Count: return "COUNT";
  }
  return "?";
}

double
aggregate_eval(AggKind kind, const AttributeRef& attr, const Relation& input)
{
  auto col = resolve_attribute(input.columns, attr);
  if (!col) {
    throw UnknownAttribute("unknown attribute " + render(attr));
  }
  if (kind == AggKind::Count) {
    return static_cast<double>(input.rows.size());
  }
  if (input.rows.empty() && kind != AggKind::Sum) {
    throw EmptyWindow(std::string(to_string(kind)) + " over an empty window");
  }
  double sum = 0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& row : input.rows) {
    auto v = as_number(row.at(*col));
    if (!v) {
      throw UnknownAttribute("attribute " + render(attr) + " is not numeric");
    }
    sum += *v;
    lo = std::min(lo, *v);
    hi = std::max(hi, *v);
  }
  switch (kind) {
    case AggKind::Sum: return sum;
    case AggKind::Min: return lo;
    case AggKind::Max: return hi;
    case AggKind::Avg: return sum / static_cast<double>(input.rows.size());
    case AggKind::Count: break;
  }
  return 0;
}

bool
sequence_eval(const Relation& a, const Relation& b)
{
  if (a.empty() || b.empty()) {
    return false;
  }
  Timestamp earliest = std::numeric_limits<Timestamp>::max();
  for (const auto& row : a.rows) {
    earliest = std::min(earliest, row_ts(row));
  }
  return *b.newestTs() > earliest;
}

} // namespace cepnet
