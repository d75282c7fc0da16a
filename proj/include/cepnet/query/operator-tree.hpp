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

#ifndef CEPNET_QUERY_OPERATOR_TREE_HPP
#define CEPNET_QUERY_OPERATOR_TREE_HPP

#include "cepnet/query/bool-expr.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cepnet {

/// Stream alias, format keyword or named parameter.
struct Identifier
{
  std::string text;

  friend bool
  operator==(const Identifier&, const Identifier&) = default;
};

/// Window extent or prediction horizon: seconds or minutes.
struct DurationLit
{
  std::int64_t magnitude = 1;
  char unit = 's';

  std::int64_t
  millis() const noexcept
  {
    return magnitude * (unit == 'm' ? 60'000 : 1'000);
  }

  friend bool
  operator==(const DurationLit&, const DurationLit&) = default;
};

using Param = std::variant<Identifier, NumberLit, DurationLit, AttributeRef, BoolExpr>;

std::string
render(const Param& p);

/// Output packet type requested for an operator's results.
enum class Format { DataStream, Data };

/// Vertex of the binary operator tree.
struct OperatorNode
{
  std::string kind; ///< canonical upper-case keyword, e.g. "JOIN"
  std::optional<Format> format; ///< set only when written in the query
  std::vector<Param> params;    ///< non-child arguments in source order
  std::vector<OperatorNode> children; ///< left, then right
  std::optional<NodeId> assignedNode;
  int index = -1;          ///< pre-order number, root is 0
  std::string nfn;         ///< lambda expression of the subtree rooted here
  std::vector<Column> output; ///< inferred output columns

  const OperatorNode*
  left() const noexcept
  {
    return children.empty() ? nullptr : &children[0];
  }

  const OperatorNode*
  right() const noexcept
  {
    return children.size() < 2 ? nullptr : &children[1];
  }

  /// Total number of operators in the subtree.
  std::size_t
  count() const noexcept;

  /// Node with the given pre-order index, or nullptr.
  const OperatorNode*
  find(int preorderIndex) const noexcept;

  OperatorNode*
  find(int preorderIndex) noexcept;

  /// Parent of the node with the given index, or nullptr for the root.
  const OperatorNode*
  parentOf(int preorderIndex) const noexcept;

  friend bool
  operator==(const OperatorNode&, const OperatorNode&) = default;
};

void
for_each_preorder(const OperatorNode& root, const std::function<void(const OperatorNode&, int depth)>& fn);

void
for_each_preorder(OperatorNode& root, const std::function<void(OperatorNode&)>& fn);

/// Renumbers the tree in depth-first pre-order (parent, left, right).
void
number_preorder(OperatorNode& root);

/// Stream aliases read by the leaves of the tree, in pre-order, without repeats.
std::vector<std::string>
stream_aliases(const OperatorNode& root);

/// Indented listing: one operator per line with its index and parameters.
std::string
print_tree(const OperatorNode& root);

} // namespace cepnet

#endif // CEPNET_QUERY_OPERATOR_TREE_HPP
