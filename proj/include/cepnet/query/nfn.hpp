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

#ifndef CEPNET_QUERY_NFN_HPP
#define CEPNET_QUERY_NFN_HPP

#include "cepnet/query/operator-registry.hpp"
#include "cepnet/query/operator-tree.hpp"

#include <string>

namespace cepnet {

/// Placeholder node name used before placement.
inline constexpr const char* NFN_PLACEHOLDER = "nodeQuery";

/// Nested `(call <n> /node/<node>/nfn_service_<Op> args...)` text where n is
/// 1 + parameters + children.
std::string
to_nfn_expression(const OperatorNode& tree, const OperatorRegistry& registry = OperatorRegistry::builtin());

/// Recomputes OperatorNode::nfn for every node of the tree.
void
refresh_nfn(OperatorNode& tree, const OperatorRegistry& registry = OperatorRegistry::builtin());

/// Sets the assigned node of one operator and refreshes the expressions.
void
assign_node(OperatorNode& tree, int preorderIndex, const NodeId& node,
            const OperatorRegistry& registry = OperatorRegistry::builtin());

} // namespace cepnet

#endif // CEPNET_QUERY_NFN_HPP
