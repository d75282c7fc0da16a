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

#include "cepnet/sim/topology.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cepnet {

std::string
to_string(Role role)
{
  switch (role) {
    case Role::Producer: return "producer";
    case Role::Broker: return "broker";
    case Role::Consumer: return "consumer";
  }
  return "?";
}

const NodeSpec*
TopologyConfig::find(const NodeId& id) const
{
  for (const auto& n : nodes) {
    if (n.id == id) {
      return &n;
    }
  }
  return nullptr;
}

std::vector<NodeId>
TopologyConfig::ids(Role role) const
{
  std::vector<NodeId> out;
  for (const auto& n : nodes) {
    if (n.role == role) {
      out.push_back(n.id);
    }
  }
  return out;
}

DelayMap
TopologyConfig::configuredDelays() const
{
  DelayMap map;
  for (const auto& l : links) {
    map.setLink(l.a, l.b, l.delayMs);
  }
  for (const auto& n : nodes) {
    if (n.role == Role::Broker) {
      map.setNode(n.id, n.processingDelayMs);
    }
  }
  return map;
}

void
TopologyConfig::validate() const
{
  if (nodes.empty()) {
    throw ConfigError("topology has no nodes");
  }
  std::set<NodeId> seen;
  for (const auto& n : nodes) {
    if (!seen.insert(n.id).second) {
      throw ConfigError("duplicate node '" + n.id + "'");
    }
    if (n.processingDelayMs < 0) {
      throw ConfigError("negative processing delay on '" + n.id + "'");
    }
  }
  std::map<NodeId, std::set<NodeId>> adj;
  std::set<std::pair<NodeId, NodeId>> pairs;
  for (const auto& l : links) {
    const auto* a = find(l.a);
    const auto* b = find(l.b);
    if (a == nullptr || b == nullptr) {
      throw ConfigError("link " + l.a + "-" + l.b + " names an unknown node");
    }
    if (l.a == l.b) {
      throw ConfigError("self link on '" + l.a + "'");
    }
    if (l.delayMs < 0) {
      throw ConfigError("negative delay on link " + l.a + "-" + l.b);
    }
    if (l.capacity == 0) {
      throw ConfigError("zero capacity on link " + l.a + "-" + l.b);
    }
    if (a->role != Role::Broker && b->role != Role::Broker) {
      throw ConfigError("link " + l.a + "-" + l.b + " does not touch a broker");
    }
    if (!pairs.insert(std::minmax(l.a, l.b)).second) {
      throw ConfigError("duplicate link " + l.a + "-" + l.b);
    }
    adj[l.a].insert(l.b);
    adj[l.b].insert(l.a);
  }
  if (ids(Role::Broker).empty()) {
    throw ConfigError("topology has no broker");
  }
  std::set<NodeId> reached{nodes.front().id};
  std::vector<NodeId> stack{nodes.front().id};
  while (!stack.empty()) {
    auto n = stack.back();
    stack.pop_back();
    for (const auto& m : adj[n]) {
      if (reached.insert(m).second) {
        stack.push_back(m);
      }
    }
  }
  if (reached.size() != nodes.size()) {
    for (const auto& n : nodes) {
      if (reached.count(n.id) == 0) {
        throw ConfigError("topology is disconnected: '" + n.id + "' is unreachable");
      }
    }
  }
}

namespace {

double
number(const std::string& text, const std::string& where)
{
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used == text.size()) {
      return v;
    }
  }
  catch (const std::exception&) {
  }
  throw ConfigError(where + ": expected a number, got '" + text + "'");
}

} // namespace

TopologyConfig
parse_topology(std::istream& in, const std::string& source)
{
  TopologyConfig config;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) {
      tok.push_back(t);
    }
    if (tok.empty()) {
      continue;
    }
    std::string where = source + ":" + std::to_string(lineNo);
    if (tok[0] == "node") {
      if (tok.size() < 3 || tok.size() > 4) {
        throw ConfigError(where + ": expected 'node <id> <role> [processing_ms]'");
      }
      NodeSpec n;
      n.id = tok[1];
      if (tok[2] == "producer") {
        n.role = Role::Producer;
      }
      else if (tok[2] == "broker") {
        n.role = Role::Broker;
      }
      else if (tok[2] == "consumer") {
        n.role = Role::Consumer;
      }
      else {
        throw ConfigError(where + ": unknown role '" + tok[2] + "'");
      }
      if (tok.size() == 4) {
        n.processingDelayMs = number(tok[3], where);
      }
      config.nodes.push_back(n);
    }
    else if (tok[0] == "link") {
      if (tok.size() < 4 || tok.size() > 5) {
        throw ConfigError(where + ": expected 'link <a> <b> <delay_ms> [capacity]'");
      }
      LinkSpec l{tok[1], tok[2], number(tok[3], where)};
      if (tok.size() == 5) {
        double cap = number(tok[4], where);
        if (cap < 1 || cap != static_cast<double>(static_cast<std::size_t>(cap))) {
          throw ConfigError(where + ": capacity must be a positive integer");
        }
        l.capacity = static_cast<std::size_t>(cap);
      }
      config.links.push_back(l);
    }
    else {
      throw ConfigError(where + ": unknown directive '" + tok[0] + "'");
    }
  }
  try {
    config.validate();
  }
  catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return config;
}

TopologyConfig
load_topology(const std::string& path)
{
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open topology '" + path + "'");
  }
  return parse_topology(in, path);
}

std::optional<TopologyConfig>
preset_topology(const std::string& name)
{
  static const char* centralized = R"(
node p1 producer
node p2 producer
node b1 broker 0.5
node c1 consumer
link p1 b1 1
link p2 b1 1
link b1 c1 1
)";
  static const char* distributed = R"(
node p1 producer
node p2 producer
node b1 broker 0.5
node b2 broker 0.5
node b3 broker 0.5
node b4 broker 0.5
node b5 broker 0.5
node b6 broker 0.5
node c1 consumer
link p1 b1 1
link p2 b2 1
link b1 b2 4
link b1 b3 2
link b2 b3 2
link b3 b4 2
link b3 b5 3
link b4 b5 1
link b4 b6 2
link b5 b6 2
link b6 c1 1
)";
  const char* text = nullptr;
  if (name == "centralized") {
    text = centralized;
  }
  else if (name == "distributed") {
    text = distributed;
  }
  else {
    return std::nullopt;
  }
  std::istringstream in(text);
  return parse_topology(in, "preset:" + name);
}

std::string
format_topology(const TopologyConfig& config)
{
  std::ostringstream out;
  for (const auto& n : config.nodes) {
    out << "node " << n.id << ' ' << to_string(n.role);
    if (n.processingDelayMs != 0) {
      out << ' ' << n.processingDelayMs;
    }
    out << '\n';
  }
  for (const auto& l : config.links) {
    out << "link " << l.a << ' ' << l.b << ' ' << l.delayMs;
    if (l.capacity != 64) {
      out << ' ' << l.capacity;
    }
    out << '\n';
  }
  return out.str();
}

} // namespace cepnet
