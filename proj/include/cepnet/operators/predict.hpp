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

#ifndef CEPNET_OPERATORS_PREDICT_HPP
#define CEPNET_OPERATORS_PREDICT_HPP

#include "cepnet/operators/relation.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace cepnet {

/// How the current average and the historical median are combined.
enum class CombineMode {
  Literal, ///< avg + median
  Halved,  ///< (avg + median) / 2
};

/// Accepts "literal" or "halved"; throws cepnet::Error otherwise.
CombineMode
parse_combine_mode(std::string_view text);

const char*
to_string(CombineMode mode) noexcept;

/// Throws cepnet::Error on an empty input.
double
median(std::vector<double> values);

double
combine(double currentAvg, double historicalMedian, CombineMode mode) noexcept;

struct PredictConfig
{
  Timestamp slotMs = 60'000;        ///< averaging slot, the WINDOW extent
  Timestamp horizonMs = 300'000;    ///< prediction interval
  Timestamp periodMs = 86'400'000;  ///< history wraps after this long
  CombineMode mode = CombineMode::Literal;

  std::int64_t
  slotsPerPeriod() const noexcept
  {
    return std::max<std::int64_t>(1, periodMs / slotMs);
  }
};

struct PredictionTuple
{
  Timestamp ts = 0;
  Value plugId;
  Value householdId;
  Value houseId;
  double predictedLoad = 0;

  Row
  toRow() const;

  friend bool
  operator==(const PredictionTuple&, const PredictionTuple&) = default;
};

/// Per-operator prediction state: closed slot averages keyed by slot index
/// within the period, plus the running slot and the next epoch.
struct PredictState
{
  PredictConfig config;
  std::map<std::int64_t, std::vector<double>> history;
  std::optional<std::int64_t> currentSlot;
  double currentAvg = 0;
  std::optional<Timestamp> nextEpoch;
};

/// One tick at logical time now over the current window (plug schema
/// columns). Records the window average for the running slot; at an epoch
/// returns the prediction for two slots ahead stamped with the epoch time.
std::optional<PredictionTuple>
predict_eval(PredictState& state, const Relation& window, Timestamp now);

} // namespace cepnet

#endif // CEPNET_OPERATORS_PREDICT_HPP
