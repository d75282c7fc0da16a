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

#ifndef CEPNET_QUERY_OPERATOR_REGISTRY_HPP
#define CEPNET_QUERY_OPERATOR_REGISTRY_HPP

#include "cepnet/query/catalog.hpp"
#include "cepnet/query/operator-tree.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cepnet {

/// Kind of argument an operator accepts at a given position.
enum class Slot {
  Child,     ///< nested operator
  Stream,    ///< stream alias bound in the catalog
  Extent,    ///< window size: duration or tuple count
  Condition, ///< boolean expression
  Attribute, ///< attribute of the child's output
  Horizon,   ///< duration
  Scalar,    ///< positive number or named numeric parameter
  Area,      ///< named Bounds parameter
};

const char*
to_string(Slot slot) noexcept;

/// Registry entry describing one operator keyword: its arity contract,
/// parameter validator and output schema.
struct OperatorSpec
{
  std::string keyword;  ///< upper-case, e.g. "JOIN"
  std::string service;  ///< NFN service suffix, e.g. "Join"
  std::vector<Slot> signature;
  bool acceptsFormat = true;
  bool arrowSeparated = false; ///< children may be separated by ->

  /// Extra validation once children and parameters are in place.
  /// Throws SemanticError; the offset locates the operator keyword.
  std::function<void(const OperatorNode&, const Catalog&, std::size_t offset)> check;

  /// Output columns given the node with children already typed.
  std::function<std::vector<Column>(const OperatorNode&, const Catalog&)> output;

  std::size_t
  childCount() const;
};

class OperatorRegistry
{
public:
  /// Throws cepnet::Error when the keyword is already registered.
  void
  add(OperatorSpec spec);

  /// Case-insensitive lookup.
  const OperatorSpec*
  find(std::string_view keyword) const;

  std::vector<std::string>
  keywords() const;

  /// JOIN, FILTER, WINDOW, SEQUENCE, SUM, MIN, MAX, AVG, COUNT, HEATMAP, PREDICT.
  static const OperatorRegistry&
  builtin();

  static OperatorRegistry
  makeBuiltin();

private:
  std::map<std::string, OperatorSpec> m_specs;
};

/// Renders a parameter as it appears in query text for the given slot.
std::string
render_arg(const Param& p, Slot slot);

} // namespace cepnet

#endif // CEPNET_QUERY_OPERATOR_REGISTRY_HPP
