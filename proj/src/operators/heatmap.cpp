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

#include "cepnet/operators/heatmap.hpp"

#include <cmath>
#include <map>
#include <numeric>

namespace cepnet {

namespace {

// absorbs representation error so that 1/0.25-style ranges divide exactly
constexpr double CELL_EPSILON = 1e-9;

} // namespace

std::int64_t
HeatGrid::total() const
{
  std::int64_t sum = 0;
  for (const auto& row : grid) {
    sum = std::accumulate(row.begin(), row.end(), sum);
  }
  return sum;
}

std::string
HeatGrid::toCsv(char rowSeparator) const
{
  std::string out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    if (r > 0) {
      out += rowSeparator;
    }
    for (std::size_t c = 0; c < grid[r].size(); ++c) {
      if (c > 0) {
        out += ',';
      }
      out += std::to_string(grid[r][c]);
    }
  }
  if (rowSeparator == '\n' && !out.empty()) {
    out += '\n';
  }
  return out;
}

HeatGrid
make_heat_grid(double cellSize, const Bounds& bounds)
{
  if (!(cellSize > 0) || !std::isfinite(cellSize)) {
    throw DegenerateBounds("cell size must be positive");
  }
  if (!(bounds.latMax > bounds.latMin) || !(bounds.longMax > bounds.longMin)) {
    throw DegenerateBounds("area bounds must satisfy max > min on both axes");
  }
  HeatGrid g;
  g.bounds = bounds;
  g.cellSize = cellSize;
  g.hc = static_cast<int>(std::floor((bounds.longMax - bounds.longMin) / cellSize + CELL_EPSILON));
  g.vc = static_cast<int>(std::floor((bounds.latMax - bounds.latMin) / cellSize + CELL_EPSILON));
  if (g.hc < 1 || g.vc < 1) {
    throw DegenerateBounds("area is smaller than one cell");
  }
  g.grid.assign(static_cast<std::size_t>(g.vc), std::vector<std::int64_t>(static_cast<std::size_t>(g.hc), 0));
  return g;
}

HeatGrid
heatmap_eval(const std::vector<std::pair<double, double>>& points, double cellSize, const Bounds& bounds)
{
  HeatGrid g = make_heat_grid(cellSize, bounds);
  for (auto [lat, lon] : points) {
    double row = std::floor((lat - bounds.latMin) / cellSize);
    double col = std::floor((lon - bounds.longMin) / cellSize);
    if (!(row >= 0 && row < g.vc && col >= 0 && col < g.hc)) {
      ++g.skipped;
      continue;
    }
    ++g.grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }
  return g;
}

HeatGrid
heatmap_eval(const Relation& input, double cellSize, const Bounds& bounds)
{
  std::map<std::string, std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> groups;
  std::vector<std::string> order;
  for (std::size_t i = 0; i < input.columns.size(); ++i) {
    const auto& c = input.columns[i];
    if (c.name != "latitude" && c.name != "longitude") {
      continue;
    }
    auto [it, fresh] = groups.try_emplace(c.qualifier);
    if (fresh) {
      order.push_back(c.qualifier);
    }
    (c.name == "latitude" ? it->second.first : it->second.second) = i;
  }

  std::vector<std::pair<double, double>> points;
  for (const auto& row : input.rows) {
    for (const auto& q : order) {
      const auto& [lat, lon] = groups[q];
      if (!lat || !lon) {
        continue;
      }
      auto a = as_number(row.at(*lat));
      auto b = as_number(row.at(*lon));
      points.emplace_back(a.value_or(NAN), b.value_or(NAN));
    }
  }
  return heatmap_eval(points, cellSize, bounds);
}

} // namespace cepnet
