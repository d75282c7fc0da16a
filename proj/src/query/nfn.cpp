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

#include "cepnet/query/nfn.hpp"

namespace cepnet {

std::string
to_nfn_expression(const OperatorNode& tree, const OperatorRegistry& registry)
{
  const auto* spec = registry.find(tree.kind);
  if (spec == nullptr) {
    throw Error("no operator registered for " + tree.kind);
  }
  std::size_t n = 1 + tree.params.size() + tree.children.size() + (tree.format ? 1 : 0);
  std::string out = "(call " + std::to_string(n) + " /node/" +
                    tree.assignedNode.value_or(NFN_PLACEHOLDER) + "/nfn_service_" + spec->service;
  if (tree.format) {
    out += *tree.format == Format::Data ? " Data" : " DataStream";
  }
  std::size_t param = 0;
  std::size_t child = 0;
  for (Slot slot : spec->signature) {
    out += ' ';
    if (slot == Slot::Child) {
      out += to_nfn_expression(tree.children.at(child++), registry);
    }
    else {
      out += render_arg(tree.params.at(param++), slot);
    }
  }
  return out + ")";
}

void
refresh_nfn(OperatorNode& tree, const OperatorRegistry& registry)
{
  for (auto& c : tree.children) {
    refresh_nfn(c, registry);
  }
  tree.nfn = to_nfn_expression(tree, registry);
}

void
assign_node(OperatorNode& tree, int preorderIndex, const NodeId& node, const OperatorRegistry& registry)
{
  auto* target = tree.find(preorderIndex);
  if (target == nullptr) {
    throw Error("no operator with index " + std::to_string(preorderIndex));
  }
  target->assignedNode = node;
  refresh_nfn(tree, registry);
}

} // namespace cepnet
