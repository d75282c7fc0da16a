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

#ifndef CEPNET_PLACEMENT_PATH_HPP
#define CEPNET_PLACEMENT_PATH_HPP

#include "cepnet/placement/delay-map.hpp"

#include <map>
#include <vector>

namespace cepnet {

class NoPath : public Error
{
public:
  using Error::Error;
};

struct Route
{
  std::vector<NodeId> nodes; ///< both endpoints included
  double cost = 0;
};

/// Cheapest route under link delay plus node delay of every node on it.
/// Equal costs resolve to the lexicographically smallest node sequence.
/// Nodes with infinite delay are never used.
Route
shortest_route(const DelayMap& delays, const NodeId& from, const NodeId& to);

/// Summed link and node delays of a route; infinity if a link is missing.
double
route_cost(const DelayMap& delays, const std::vector<NodeId>& nodes);

/// Per-producer broker paths merged at their earliest common broker.
struct PathPlan
{
  std::vector<NodeId> trunk;
  std::map<NodeId, std::vector<NodeId>> branches; ///< producer -> brokers before the trunk

  /// Brokers from the producer's ingress to the consumer side.
  std::vector<NodeId>
  full(const NodeId& producer) const;

  const NodeId&
  coordinator() const
  {
    return trunk.back();
  }

  /// Every broker on any branch or the trunk, in first-seen order.
  std::vector<NodeId>
  brokers() const;
};

/// The consumer is either an endpoint node or the broker it attaches to.
PathPlan
plan_paths(const DelayMap& delays, const std::vector<NodeId>& producers, const NodeId& consumer);

/// Broker path for the first producer.
std::vector<NodeId>
build_path(const DelayMap& delays, const std::vector<NodeId>& producers, const NodeId& consumer);

} // namespace cepnet

#endif // CEPNET_PLACEMENT_PATH_HPP
