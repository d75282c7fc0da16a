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

#include "cepnet/placement/assign.hpp"
#include "cepnet/query/nfn.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>

namespace cepnet {

std::string
to_string(PlacementMode mode)
{
  return mode == PlacementMode::Centralized ? "centralized" : "distributed";
}

PlacementMode
parse_placement_mode(const std::string& text)
{
  if (text == "centralized") {
    return PlacementMode::Centralized;
  }
  if (text == "distributed") {
    return PlacementMode::Distributed;
  }
  throw Error("unknown placement mode '" + text + "'");
}

std::map<NodeId, std::size_t>
PlacementPlan::operatorCounts() const
{
  std::map<NodeId, std::size_t> counts;
  for (const auto& [_, node] : assignment) {
    ++counts[node];
  }
  return counts;
}

std::vector<int>
PlacementPlan::hostedOn(const NodeId& node) const
{
  std::vector<int> out;
  for (const auto& [idx, n] : assignment) {
    if (n == node) {
      out.push_back(idx);
    }
  }
  return out;
}

std::string
PlacementPlan::dump() const
{
  nlohmann::ordered_json j;
  j["mode"] = to_string(mode);
  j["coordinator"] = coordinator;
  j["path"] = path;
  auto branches = nlohmann::ordered_json::object();
  for (const auto& [producer, branch] : paths.branches) {
    branches[producer] = branch;
  }
  j["branches"] = branches;
  j["trunk"] = paths.trunk;
  auto ops = nlohmann::ordered_json::array();
  for (const auto& [idx, node] : assignment) {
    ops.push_back({{"index", idx}, {"kind", kinds.at(idx)}, {"node", node}});
  }
  j["operators"] = ops;
  return j.dump(2);
}

namespace {

std::vector<NodeId>
candidates(const OperatorNode& op, const PathPlan& paths, const StreamOrigins& origins)
{
  std::vector<std::vector<NodeId>> lists;
  for (const auto& alias : stream_aliases(op)) {
    auto it = origins.find(alias);
    lists.push_back(it == origins.end() ? paths.trunk : paths.full(it->second));
  }
  if (lists.empty()) {
    return paths.trunk;
  }
  std::vector<NodeId> out;
  for (const auto& n : lists.front()) {
    bool everywhere = std::all_of(lists.begin() + 1, lists.end(), [&](const auto& l) {
      return std::find(l.begin(), l.end(), n) != l.end();
    });
    if (everywhere) {
      out.push_back(n);
    }
  }
  return out;
}

} // namespace

PlacementPlan
assign_operators(OperatorNode& tree, const PathPlan& paths, const StreamOrigins& origins, PlacementMode mode,
                 const std::map<NodeId, std::size_t>& loads)
{
  if (paths.trunk.empty()) {
    throw NoPath("empty placement path");
  }
  PlacementPlan plan;
  plan.mode = mode;
  plan.paths = paths;
  plan.coordinator = paths.coordinator();
  plan.path = origins.empty() ? paths.trunk : paths.full(origins.begin()->second);
  if (auto aliases = stream_aliases(tree); !aliases.empty() && origins.count(aliases.front()) != 0) {
    plan.path = paths.full(origins.at(aliases.front()));
  }

  plan.assignment[tree.index] = plan.coordinator;
  if (mode == PlacementMode::Distributed) {
    auto load = loads;
    ++load[plan.coordinator];
    std::function<void(const OperatorNode&)> visit = [&](const OperatorNode& op) {
      for (const auto& c : op.children) {
        visit(c);
      }
      if (op.index == tree.index) {
        return;
      }
      auto cands = candidates(op, paths, origins);
      std::size_t lo = 0;
      for (const auto& c : op.children) {
        auto at = std::find(cands.begin(), cands.end(), plan.assignment.at(c.index));
        if (at != cands.end()) {
          lo = std::max(lo, static_cast<std::size_t>(at - cands.begin()));
        }
      }
      std::size_t pick = lo;
      for (std::size_t i = lo; i < cands.size(); ++i) {
        if (load[cands[i]] < load[cands[pick]]) {
          pick = i;
        }
      }
      plan.assignment[op.index] = cands[pick];
      ++load[cands[pick]];
    };
    visit(tree);
  }
  else {
    for_each_preorder(tree, [&](const OperatorNode& op, int) { plan.assignment[op.index] = plan.coordinator; });
  }

  for_each_preorder(tree, [&](OperatorNode& op) {
    op.assignedNode = plan.assignment.at(op.index);
    plan.kinds[op.index] = op.kind;
  });
  refresh_nfn(tree);
  return plan;
}

PlacementPlan
assign_operators(OperatorNode& tree, const std::vector<NodeId>& path, PlacementMode mode,
                 const std::map<NodeId, std::size_t>& loads)
{
  PathPlan paths;
  paths.trunk = path;
  return assign_operators(tree, paths, {}, mode, loads);
}

} // namespace cepnet
