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

#include "cepnet/query/bool-expr.hpp"

namespace cepnet {

BoolExpr
BoolExpr::compare(Operand lhs, CompareOp op, Operand rhs)
{
  BoolExpr e;
  e.kind = Kind::Compare;
  e.comparison = Comparison{std::move(lhs), op, std::move(rhs)};
  return e;
}

BoolExpr
BoolExpr::combine(Kind kind, BoolExpr lhs, BoolExpr rhs)
{
  BoolExpr e;
  e.kind = kind;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

std::vector<AttributeRef>
BoolExpr::attributes() const
{
  std::vector<AttributeRef> out;
  if (kind == Kind::Compare) {
    for (const Operand* o : {&comparison.lhs, &comparison.rhs}) {
      if (const auto* a = std::get_if<AttributeRef>(o)) {
        out.push_back(*a);
      }
    }
    return out;
  }
  for (const auto& child : operands) {
    auto sub = child.attributes();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

const char*
to_string(CompareOp op) noexcept
{
  switch (op) {
    case CompareOp::Lt: return "<";
    case CompareOp::Gt: return ">";
    case CompareOp::Eq: return "=";
    case CompareOp::Le: return "<=";
    case CompareOp::Ge: return ">=";
  }
  return "?";
}

std::string
render(const AttributeRef& a)
{
  std::string out;
  if (!a.qualifier.empty()) {
    out = a.qualifier + ".";
  }
  return out + "'" + a.name + "'";
}

namespace {

std::string
render_operand(const Operand& o)
{
  if (const auto* a = std::get_if<AttributeRef>(&o)) {
    return render(*a);
  }
  return std::get<NumberLit>(o).text;
}

} // namespace

std::string
render(const BoolExpr& e)
{
  switch (e.kind) {
    case BoolExpr::Kind::Compare:
      return render_operand(e.comparison.lhs) + to_string(e.comparison.op) +
             render_operand(e.comparison.rhs);
    case BoolExpr::Kind::And:
      return render(e.operands[0]) + "&" + render(e.operands[1]);
    case BoolExpr::Kind::Or:
      return render(e.operands[0]) + "|" + render(e.operands[1]);
  }
  return {};
}

std::optional<std::size_t>
resolve_attribute(const std::vector<Column>& columns, const AttributeRef& ref)
{
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].matches(ref.qualifier, ref.name)) {
      return i;
    }
  }
  return std::nullopt;
}

} // namespace cepnet
