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

#ifndef CEPNET_QUERY_PARSER_HPP
#define CEPNET_QUERY_PARSER_HPP

#include "cepnet/query/catalog.hpp"
#include "cepnet/query/errors.hpp"
#include "cepnet/query/operator-registry.hpp"
#include "cepnet/query/operator-tree.hpp"

#include <string>
#include <string_view>

namespace cepnet {

/// Parses and validates a query into an operator tree numbered in pre-order.
/// Throws ParseError on syntax problems and SemanticError when the query is
/// well-formed but refers to unknown operators, streams or attributes, or
/// violates an operator's arity.
OperatorNode
parse_query(std::string_view query, const Catalog& catalog = Catalog::defaults(),
            const OperatorRegistry& registry = OperatorRegistry::builtin());

/// parse_query plus the NFN expression of every subtree.
OperatorNode
create_operator_graph(std::string_view query, const Catalog& catalog = Catalog::defaults(),
                      const OperatorRegistry& registry = OperatorRegistry::builtin());

/// Query text that parses back to the same tree.
std::string
render_query(const OperatorNode& root, const OperatorRegistry& registry = OperatorRegistry::builtin());

} // namespace cepnet

#endif // CEPNET_QUERY_PARSER_HPP
