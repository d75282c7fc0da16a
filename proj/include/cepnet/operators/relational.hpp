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

#ifndef CEPNET_OPERATORS_RELATIONAL_HPP
#define CEPNET_OPERATORS_RELATIONAL_HPP

#include "cepnet/operators/relation.hpp"
#include "cepnet/query/bool-expr.hpp"

#include <string_view>

namespace cepnet {

class UnknownAttribute : public Error
{
public:
  using Error::Error;
};

class EmptyWindow : public Error
{
public:
  using Error::Error;
};

/// Condition with attribute references bound to column positions.
class BoundCondition
{
public:
  /// Throws UnknownAttribute when a reference matches no column.
  BoundCondition(const BoolExpr& expr, const std::vector<Column>& columns);

  bool
  operator()(const Row& row) const;

private:
  struct Term
  {
    bool isColumn;
    std::size_t column;
    double number;
  };

  struct Node
  {
    BoolExpr::Kind kind;
    Term lhs;
    CompareOp op;
    Term rhs;
    std::size_t left = 0;
    std::size_t right = 0;
  };

  std::size_t
  bind(const BoolExpr& e, const std::vector<Column>& columns);

  bool
  eval(std::size_t node, const Row& row) const;

  std::vector<Node> m_nodes;
  std::size_t m_root = 0;
};

/// Numbers compare numerically, text compares lexicographically and a number
/// never equals text.
bool
compare_values(const Value& a, CompareOp op, const Value& b);

Relation
filter_eval(const Relation& input, const BoolExpr& expr);

/// Output row = [max ts] ++ left[1..] ++ right[1..] for every satisfying pair,
/// in (left index, right index) order. The condition sees left ++ right.
Relation
join_eval(const Relation& left, const Relation& right, const BoolExpr& cond);

enum class AggKind { Sum, Min, Max, Avg, Count };

/// Throws cepnet::Error for an unknown name. Case-insensitive.
AggKind
parse_agg_kind(std::string_view name);

const char*
to_string(AggKind kind) noexcept;

/// Throws EmptyWindow for MIN/MAX/AVG on no rows and UnknownAttribute when the
/// attribute is missing or holds text.
double
aggregate_eval(AggKind kind, const AttributeRef& attr, const Relation& input);

/// True iff some row of a has a ts strictly below some row of b.
bool
sequence_eval(const Relation& a, const Relation& b);

} // namespace cepnet

#endif // CEPNET_OPERATORS_RELATIONAL_HPP
