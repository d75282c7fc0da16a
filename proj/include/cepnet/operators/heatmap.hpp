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

#ifndef CEPNET_OPERATORS_HEATMAP_HPP
#define CEPNET_OPERATORS_HEATMAP_HPP

#include "cepnet/operators/relation.hpp"
#include "cepnet/query/catalog.hpp"

#include <utility>
#include <vector>

namespace cepnet {

class DegenerateBounds : public Error
{
public:
  using Error::Error;
};

/// Location counts over a lat/long area. grid[row][col] with row = latitude
/// cell and col = longitude cell.
struct HeatGrid
{
  Bounds bounds;
  double cellSize = 0;
  int hc = 0; ///< longitude cells
  int vc = 0; ///< latitude cells
  std::vector<std::vector<std::int64_t>> grid;
  std::int64_t skipped = 0; ///< points outside the area

  std::int64_t
  total() const;

  /// Row-major counts, one latitude row per line.
  std::string
  toCsv(char rowSeparator = '\n') const;

  friend bool
  operator==(const HeatGrid&, const HeatGrid&) = default;
};

/// Empty grid. Throws DegenerateBounds for a non-positive cell size, an empty
/// range or a range smaller than one cell.
HeatGrid
make_heat_grid(double cellSize, const Bounds& bounds);

/// Bins (latitude, longitude) points.
HeatGrid
heatmap_eval(const std::vector<std::pair<double, double>>& points, double cellSize, const Bounds& bounds);

/// Collects one point per row and per stream qualifier that carries both a
/// latitude and a longitude column, then bins them.
HeatGrid
heatmap_eval(const Relation& input, double cellSize, const Bounds& bounds);

} // namespace cepnet

#endif // CEPNET_OPERATORS_HEATMAP_HPP
