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

#include "cepnet/placement/delay-map.hpp"

#include <cstdio>
#include <set>

namespace cepnet {

void
DelayMap::setNode(const NodeId& node, double delayMs, Timestamp measuredAt)
{
  if (delayMs < 0) {
    throw Error("negative delay for " + node);
  }
  m_nodes[node] = delayMs;
  m_measuredAt[node] = measuredAt;
}

void
DelayMap::setLink(const NodeId& a, const NodeId& b, double delayMs)
{
  if (delayMs < 0) {
    throw Error("negative link delay " + a + "-" + b);
  }
  m_adj[a][b] = delayMs;
  m_adj[b][a] = delayMs;
}

double
DelayMap::nodeDelay(const NodeId& node) const
{
  auto it = m_nodes.find(node);
  return it == m_nodes.end() ? 0.0 : it->second;
}

std::optional<double>
DelayMap::linkDelay(const NodeId& a, const NodeId& b) const
{
  auto it = m_adj.find(a);
  if (it == m_adj.end()) {
    return std::nullopt;
  }
  auto jt = it->second.find(b);
  if (jt == it->second.end()) {
    return std::nullopt;
  }
  return jt->second;
}

bool
DelayMap::reachable(const NodeId& node) const
{
  return nodeDelay(node) != INFINITE_DELAY;
}

void
DelayMap::setLoad(const NodeId& node, std::size_t operators)
{
  m_loads[node] = operators;
}

std::size_t
DelayMap::load(const NodeId& node) const
{
  auto it = m_loads.find(node);
  return it == m_loads.end() ? 0 : it->second;
}

std::vector<std::pair<NodeId, double>>
DelayMap::neighbors(const NodeId& node) const
{
  std::vector<std::pair<NodeId, double>> out;
  auto it = m_adj.find(node);
  if (it != m_adj.end()) {
    out.assign(it->second.begin(), it->second.end());
  }
  return out;
}

std::vector<NodeId>
DelayMap::allNodes() const
{
  std::set<NodeId> ids;
  for (const auto& [n, _] : m_nodes) {
    ids.insert(n);
  }
  for (const auto& [n, _] : m_adj) {
    ids.insert(n);
  }
  return {ids.begin(), ids.end()};
}

std::optional<DelayAdvert>
parse_delay_advert(const std::string& payload)
{
  DelayAdvert advert;
  bool sawDelay = false;
  std::size_t pos = 0;
  while (pos <= payload.size()) {
    auto end = payload.find(';', pos);
    if (end == std::string::npos) {
      end = payload.size();
    }
    auto field = payload.substr(pos, end - pos);
    auto eq = field.find('=');
    if (eq != std::string::npos) {
      auto key = field.substr(0, eq);
      auto val = field.substr(eq + 1);
      try {
        std::size_t used = 0;
        if (key == "delay_ms") {
          advert.delayMs = std::stod(val, &used);
          sawDelay = used == val.size() && advert.delayMs >= 0;
          if (!sawDelay) {
            return std::nullopt;
          }
        }
        else if (key == "operators") {
          advert.operators = std::stoul(val, &used);
          if (used != val.size()) {
            return std::nullopt;
          }
        }
      }
      catch (const std::exception&) {
        return std::nullopt;
      }
    }
    pos = end + 1;
  }
  if (!sawDelay) {
    return std::nullopt;
  }
  return advert;
}

std::string
format_delay_advert(const DelayAdvert& advert)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "delay_ms=%.6f;operators=%zu", advert.delayMs, advert.operators);
  return buf;
}

DelayMap
discover_delays(const NodeId& coordinator, const NetworkView& view, Timestamp now)
{
  DelayMap map;
  for (const auto& [a, b, d] : view.links) {
    map.setLink(a, b, d);
  }
  for (const auto& broker : view.brokers) {
    auto advert = view.probe ? view.probe(broker) : std::nullopt;
    if (!advert && broker == coordinator) {
      throw UnreachableNode("coordinator " + coordinator + " does not answer delay probes");
    }
    map.setNode(broker, advert ? advert->delayMs : INFINITE_DELAY, now);
    map.setLoad(broker, advert ? advert->operators : 0);
  }
  return map;
}

} // namespace cepnet
