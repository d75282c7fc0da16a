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

#include "cepnet/placement/path.hpp"

#include <algorithm>
#include <set>

namespace cepnet {

namespace {

constexpr double EPS = 1e-9;

struct Label
{
  double cost = INFINITE_DELAY;
  std::vector<NodeId> path;
};

bool
better(const Label& a, const Label& b)
{
  if (a.cost < b.cost - EPS) {
    return true;
  }
  if (a.cost > b.cost + EPS) {
    return false;
  }
  return a.path < b.path;
}

std::vector<NodeId>
brokers_only(const DelayMap& delays, const std::vector<NodeId>& nodes)
{
  std::vector<NodeId> out;
  for (const auto& n : nodes) {
    if (delays.entries().count(n) != 0) {
      out.push_back(n);
    }
  }
  return out;
}

std::vector<NodeId>
drop_loops(std::vector<NodeId> nodes)
{
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto later = std::find(nodes.rbegin(), nodes.rend() - static_cast<std::ptrdiff_t>(i) - 1, nodes[i]);
    if (later != nodes.rend() - static_cast<std::ptrdiff_t>(i) - 1) {
      auto last = later.base() - 1;
      nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(i), last);
    }
  }
  return nodes;
}

} // namespace

Route
shortest_route(const DelayMap& delays, const NodeId& from, const NodeId& to)
{
  if (!delays.reachable(from) || !delays.reachable(to)) {
    throw NoPath("no path from " + from + " to " + to);
  }
  std::map<NodeId, Label> best;
  std::set<NodeId> done;
  best[from] = {delays.nodeDelay(from), {from}};

  while (true) {
    const NodeId* current = nullptr;
    for (const auto& [id, label] : best) {
      if (done.count(id) == 0 && (current == nullptr || better(label, best.at(*current)))) {
        current = &id;
      }
    }
    if (current == nullptr) {
      break;
    }
    NodeId u = *current;
    done.insert(u);
    if (u == to) {
      break;
    }
    Label base = best.at(u);
    for (const auto& [v, link] : delays.neighbors(u)) {
      if (done.count(v) != 0 || !delays.reachable(v)) {
        continue;
      }
      Label cand{base.cost + link + delays.nodeDelay(v), base.path};
      cand.path.push_back(v);
      auto it = best.find(v);
      if (it == best.end() || better(cand, it->second)) {
        best[v] = std::move(cand);
      }
    }
  }
  auto it = best.find(to);
  if (it == best.end() || done.count(to) == 0) {
    throw NoPath("no path from " + from + " to " + to);
  }
  return {it->second.path, it->second.cost};
}

double
route_cost(const DelayMap& delays, const std::vector<NodeId>& nodes)
{
  if (nodes.empty()) {
    return INFINITE_DELAY;
  }
  double cost = delays.nodeDelay(nodes.front());
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    auto link = delays.linkDelay(nodes[i - 1], nodes[i]);
    if (!link) {
      return INFINITE_DELAY;
    }
    cost += *link + delays.nodeDelay(nodes[i]);
  }
  return cost;
}

std::vector<NodeId>
PathPlan::full(const NodeId& producer) const
{
  std::vector<NodeId> out;
  auto it = branches.find(producer);
  if (it != branches.end()) {
    out = it->second;
  }
  out.insert(out.end(), trunk.begin(), trunk.end());
  return drop_loops(std::move(out));
}

std::vector<NodeId>
PathPlan::brokers() const
{
  std::vector<NodeId> out;
  auto add = [&](const NodeId& n) {
    if (std::find(out.begin(), out.end(), n) == out.end()) {
      out.push_back(n);
    }
  };
  for (const auto& [_, branch] : branches) {
    for (const auto& n : branch) {
      add(n);
    }
  }
  for (const auto& n : trunk) {
    add(n);
  }
  return out;
}

PathPlan
plan_paths(const DelayMap& delays, const std::vector<NodeId>& producers, const NodeId& consumer)
{
  if (producers.empty()) {
    throw NoPath("no producers");
  }
  std::vector<std::vector<NodeId>> paths;
  for (const auto& p : producers) {
    auto route = shortest_route(delays, p, consumer);
    auto brokers = brokers_only(delays, route.nodes);
    if (brokers.empty()) {
      throw NoPath("no broker between " + p + " and " + consumer);
    }
    paths.push_back(std::move(brokers));
  }

  const auto& first = paths.front();
  std::size_t mergeAt = first.size();
  for (std::size_t i = 0; i < first.size() && mergeAt == first.size(); ++i) {
    bool common = std::all_of(paths.begin() + 1, paths.end(), [&](const auto& path) {
      return std::find(path.begin(), path.end(), first[i]) != path.end();
    });
    if (common) {
      mergeAt = i;
    }
  }
  if (mergeAt == first.size()) {
    throw NoPath("producer paths toward " + consumer + " share no broker");
  }

  PathPlan plan;
  plan.trunk.assign(first.begin() + static_cast<std::ptrdiff_t>(mergeAt), first.end());
  for (std::size_t k = 0; k < producers.size(); ++k) {
    const auto& path = paths[k];
    auto at = std::find(path.begin(), path.end(), plan.trunk.front());
    plan.branches[producers[k]] = std::vector<NodeId>(path.begin(), at);
  }
  return plan;
}

std::vector<NodeId>
build_path(const DelayMap& delays, const std::vector<NodeId>& producers, const NodeId& consumer)
{
  auto plan = plan_paths(delays, producers, consumer);
  return plan.full(producers.front());
}

} // namespace cepnet
