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

#ifndef CEPNET_SIM_TOPOLOGY_HPP
#define CEPNET_SIM_TOPOLOGY_HPP

#include "cepnet/common.hpp"
#include "cepnet/placement/delay-map.hpp"

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace cepnet {

/// Invalid topology or scenario file. what() carries "<source>:<line>: ..."
/// when the problem is tied to a line.
class ConfigError : public Error
{
public:
  using Error::Error;
};

enum class Role { Producer, Broker, Consumer };

std::string
to_string(Role role);

struct NodeSpec
{
  NodeId id;
  Role role = Role::Broker;
  double processingDelayMs = 0;
};

struct LinkSpec
{
  NodeId a;
  NodeId b;
  double delayMs = 1;
  std::size_t capacity = 64;
};

struct TopologyConfig
{
  std::vector<NodeSpec> nodes;
  std::vector<LinkSpec> links;

  const NodeSpec*
  find(const NodeId& id) const;

  std::vector<NodeId>
  ids(Role role) const;

  /// Link delays plus configured broker processing delays.
  DelayMap
  configuredDelays() const;

  /// Throws ConfigError: duplicate ids, unknown link ends, self links,
  /// negative delays, zero capacity, endpoints linked to non-brokers, or a
  /// disconnected graph.
  void
  validate() const;
};

/// Line format:
///   node <id> producer|broker|consumer [processing_ms]
///   link <a> <b> <delay_ms> [capacity]
/// Blank lines and text after '#' are ignored.
TopologyConfig
parse_topology(std::istream& in, const std::string& source = "<input>");

TopologyConfig
load_topology(const std::string& path);

/// "centralized" or "distributed"; nullopt for any other name.
std::optional<TopologyConfig>
preset_topology(const std::string& name);

std::string
format_topology(const TopologyConfig& config);

} // namespace cepnet

#endif // CEPNET_SIM_TOPOLOGY_HPP
