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

#ifndef CEPNET_PLACEMENT_ASSIGN_HPP
#define CEPNET_PLACEMENT_ASSIGN_HPP

#include "cepnet/placement/path.hpp"
#include "cepnet/query/operator-tree.hpp"

#include <map>
#include <string>
#include <vector>

namespace cepnet {

enum class PlacementMode { Centralized, Distributed };

std::string
to_string(PlacementMode mode);

/// Throws Error on anything but "centralized" or "distributed".
PlacementMode
parse_placement_mode(const std::string& text);

struct PlacementPlan
{
  PlacementMode mode = PlacementMode::Distributed;
  NodeId coordinator;
  PathPlan paths;
  std::map<int, NodeId> assignment; ///< pre-order index -> broker
  std::map<int, std::string> kinds;

  /// Broker list for the first producer, ingress first.
  std::vector<NodeId> path;

  std::map<NodeId, std::size_t>
  operatorCounts() const;

  /// Pre-order indices hosted on a broker.
  std::vector<int>
  hostedOn(const NodeId& node) const;

  std::string
  dump() const;
};

/// Stream alias -> producer node id.
using StreamOrigins = std::map<std::string, NodeId>;

/// Places every operator and rewrites the NFN text of the tree. The root goes
/// to the coordinator (consumer end of the trunk). In distributed mode the
/// others are visited children first and each takes the least loaded broker
/// that lies on the paths of all its streams, at or after its children;
/// ties go toward the producer. `loads` holds operators already hosted.
PlacementPlan
assign_operators(OperatorNode& tree, const PathPlan& paths, const StreamOrigins& origins, PlacementMode mode,
                 const std::map<NodeId, std::size_t>& loads = {});

/// Single-path form: every stream enters at path.front().
PlacementPlan
assign_operators(OperatorNode& tree, const std::vector<NodeId>& path, PlacementMode mode,
                 const std::map<NodeId, std::size_t>& loads = {});

} // namespace cepnet

#endif // CEPNET_PLACEMENT_ASSIGN_HPP
