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

#ifndef CEPNET_TESTS_SUPPORT_ORACLES_HPP
#define CEPNET_TESTS_SUPPORT_ORACLES_HPP

#include "cepnet/operators/heatmap.hpp"
#include "cepnet/operators/predict.hpp"
#include "cepnet/operators/relation.hpp"
#include "cepnet/placement/delay-map.hpp"
#include "cepnet/sim/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace cepnet::oracle {

/// Naive nested-loop join: every (l, r) pair whose concatenation satisfies
/// `pred`, in (l, r) order.
inline std::vector<Row>
nested_loop_join(const Relation& left, const Relation& right, const std::function<bool(const Row&)>& pred)
{
  std::vector<Row> out;
  for (const auto& l : left.rows) {
    for (const auto& r : right.rows) {
      Row both = l;
      both.insert(both.end(), r.begin(), r.end());
      if (!pred(both)) {
        continue;
      }
      Row row{static_cast<double>(std::max(row_ts(l), row_ts(r)))};
      row.insert(row.end(), l.begin() + 1, l.end());
      row.insert(row.end(), r.begin() + 1, r.end());
      out.push_back(std::move(row));
    }
  }
  return out;
}

/// Bins points by scanning cells: a point belongs to the cell whose half-open
/// interval [lo, lo + cell) contains it on both axes, otherwise it is outside.
struct Binning
{
  std::vector<std::vector<std::int64_t>> grid;
  std::int64_t outside = 0;
};

inline Binning
bin_points(const std::vector<std::pair<double, double>>& points, double cell, const Bounds& b)
{
  int rows = static_cast<int>(std::floor((b.latMax - b.latMin) / cell + 1e-9));
  int cols = static_cast<int>(std::floor((b.longMax - b.longMin) / cell + 1e-9));
  Binning out;
  out.grid.assign(rows, std::vector<std::int64_t>(cols, 0));
  for (const auto& [lat, lon] : points) {
    int row = -1;
    int col = -1;
    for (int r = 0; r < rows && row < 0; ++r) {
      double lo = b.latMin + r * cell;
      if (lat >= lo && lat < lo + cell) {
        row = r;
      }
    }
    for (int c = 0; c < cols && col < 0; ++c) {
      double lo = b.longMin + c * cell;
      if (lon >= lo && lon < lo + cell) {
        col = c;
      }
    }
    if (row < 0 || col < 0) {
      ++out.outside;
      continue;
    }
    ++out.grid[row][col];
  }
  return out;
}

/// Median by sorting a copy.
inline double
plain_median(std::vector<double> v)
{
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

inline double
plain_combine(double avg, double med, CombineMode mode)
{
  return mode == CombineMode::Literal ? avg + med : (avg + med) / 2;
}

/// Random undirected weighted graph on `n` nodes named n0..n{n-1}. Node
/// delays are drawn as well; a few nodes may be left isolated.
struct Graph
{
  std::vector<NodeId> nodes;
  std::map<NodeId, double> nodeDelay;
  std::map<std::pair<NodeId, NodeId>, double> links;

  DelayMap
  delays() const
  {
    DelayMap m;
    for (const auto& n : nodes) {
      m.setNode(n, nodeDelay.at(n));
    }
    for (const auto& [ends, d] : links) {
      m.setLink(ends.first, ends.second, d);
    }
    return m;
  }
};

inline Graph
random_graph(SeededRandom& rng, int n, double density)
{
  Graph g;
  for (int i = 0; i < n; ++i) {
    g.nodes.push_back("n" + std::to_string(i));
    g.nodeDelay[g.nodes.back()] = std::round(rng.uniform(0, 3) * 2) / 2;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform() < density) {
        g.links[{g.nodes[i], g.nodes[j]}] = 1 + std::floor(rng.uniform(0, 5));
      }
    }
  }
  return g;
}

/// Minimum cost over every simple path from `from` to `to` by exhaustive
/// depth-first enumeration. Infinity when none exists.
inline double
brute_force_min_cost(const Graph& g, const NodeId& from, const NodeId& to)
{
  std::map<NodeId, std::vector<std::pair<NodeId, double>>> adj;
  for (const auto& [ends, d] : g.links) {
    adj[ends.first].emplace_back(ends.second, d);
    adj[ends.second].emplace_back(ends.first, d);
  }
  double best = std::numeric_limits<double>::infinity();
  std::set<NodeId> onPath{from};
  std::function<void(const NodeId&, double)> walk = [&](const NodeId& at, double cost) {
    if (at == to) {
      best = std::min(best, cost);
      return;
    }
    for (const auto& [next, d] : adj[at]) {
      if (onPath.count(next) > 0) {
        continue;
      }
      onPath.insert(next);
      walk(next, cost + d + g.nodeDelay.at(next));
      onPath.erase(next);
    }
  };
  walk(from, g.nodeDelay.at(from));
  return best;
}

} // namespace cepnet::oracle

#endif // CEPNET_TESTS_SUPPORT_ORACLES_HPP
