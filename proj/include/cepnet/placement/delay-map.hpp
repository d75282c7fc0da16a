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

#ifndef CEPNET_PLACEMENT_DELAY_MAP_HPP
#define CEPNET_PLACEMENT_DELAY_MAP_HPP

#include "cepnet/common.hpp"

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace cepnet {

class UnreachableNode : public Error
{
public:
  using Error::Error;
};

inline constexpr double INFINITE_DELAY = std::numeric_limits<double>::infinity();

/// Measured one-way delays. Probed nodes carry their advertised delay (or
/// infinity when unreachable); nodes that are never probed, such as producers
/// and consumers, count as zero delay. Links are undirected.
class DelayMap
{
public:
  void
  setNode(const NodeId& node, double delayMs, Timestamp measuredAt = 0);

  void
  setLink(const NodeId& a, const NodeId& b, double delayMs);

  /// Probed delay, 0 for unprobed endpoints.
  double
  nodeDelay(const NodeId& node) const;

  std::optional<double>
  linkDelay(const NodeId& a, const NodeId& b) const;

  bool
  reachable(const NodeId& node) const;

  void
  setLoad(const NodeId& node, std::size_t operators);

  /// Hosted operator count reported with the delay, 0 when unknown.
  std::size_t
  load(const NodeId& node) const;

  const std::map<NodeId, std::size_t>&
  loads() const noexcept
  {
    return m_loads;
  }

  /// Probed nodes with their delays.
  const std::map<NodeId, double>&
  entries() const noexcept
  {
    return m_nodes;
  }

  const std::map<NodeId, Timestamp>&
  measuredAt() const noexcept
  {
    return m_measuredAt;
  }

  /// Neighbours of a node, sorted by id.
  std::vector<std::pair<NodeId, double>>
  neighbors(const NodeId& node) const;

  std::vector<NodeId>
  allNodes() const;

private:
  std::map<NodeId, double> m_nodes;
  std::map<NodeId, Timestamp> m_measuredAt;
  std::map<NodeId, std::size_t> m_loads;
  std::map<NodeId, std::map<NodeId, double>> m_adj;
};

/// Answer to /node/<id>/delay.
struct DelayAdvert
{
  double delayMs = 0;
  std::size_t operators = 0;
};

/// Parses "delay_ms=<x>;operators=<n>".
std::optional<DelayAdvert>
parse_delay_advert(const std::string& payload);

std::string
format_delay_advert(const DelayAdvert& advert);

/// What the coordinator knows about the network.
struct NetworkView
{
  std::vector<NodeId> brokers;
  std::vector<std::tuple<NodeId, NodeId, double>> links;
  /// Fetches /node/<id>/delay; absent when the node does not answer.
  std::function<std::optional<DelayAdvert>(const NodeId&)> probe;
};

/// One probe per broker. Brokers that do not answer get infinite delay.
DelayMap
discover_delays(const NodeId& coordinator, const NetworkView& view, Timestamp now = 0);

} // namespace cepnet

#endif // CEPNET_PLACEMENT_DELAY_MAP_HPP
