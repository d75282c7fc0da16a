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

#ifndef CEPNET_QUERY_BOOL_EXPR_HPP
#define CEPNET_QUERY_BOOL_EXPR_HPP

#include "cepnet/packet/schema.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cepnet {

/// Attribute reference such as 'latitude' or GPS_S1.'ts'.
struct AttributeRef
{
  std::string qualifier;
  std::string name;

  friend bool
  operator==(const AttributeRef&, const AttributeRef&) = default;
};

/// Numeric literal; keeps its source spelling for printing.
struct NumberLit
{
  double value = 0;
  std::string text;

  friend bool
  operator==(const NumberLit& a, const NumberLit& b)
  {
    return a.value == b.value;
  }
};

using Operand = std::variant<AttributeRef, NumberLit>;

enum class CompareOp { Lt, Gt, Eq, Le, Ge };

struct Comparison
{
  Operand lhs;
  CompareOp op = CompareOp::Eq;
  Operand rhs;

  friend bool
  operator==(const Comparison&, const Comparison&) = default;
};

/// Comparisons combined with & (binds tighter) and |.
struct BoolExpr
{
  enum class Kind { Compare, And, Or };

  Kind kind = Kind::Compare;
  Comparison comparison;
  std::vector<BoolExpr> operands; ///< two operands for And/Or

  static BoolExpr
  compare(Operand lhs, CompareOp op, Operand rhs);

  static BoolExpr
  combine(Kind kind, BoolExpr lhs, BoolExpr rhs);

  /// Every attribute referenced, left to right.
  std::vector<AttributeRef>
  attributes() const;

  friend bool
  operator==(const BoolExpr&, const BoolExpr&) = default;
};

std::string
render(const AttributeRef& a);

std::string
render(const BoolExpr& e);

const char*
to_string(CompareOp op) noexcept;

/// First column matching the reference, if any.
std::optional<std::size_t>
resolve_attribute(const std::vector<Column>& columns, const AttributeRef& ref);

} // namespace cepnet

#endif // CEPNET_QUERY_BOOL_EXPR_HPP
