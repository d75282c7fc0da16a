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

#include "cepnet/operators/predict.hpp"
#include "cepnet/query/bool-expr.hpp"

#include <algorithm>

namespace cepnet {

CombineMode
parse_combine_mode(std::string_view text)
{
  if (text == "literal") {
    return CombineMode::Literal;
  }
  if (text == "halved") {
    return CombineMode::Halved;
  }
  throw Error("combine mode must be literal or halved, got '" + std::string(text) + "'");
}

const char*
to_string(CombineMode mode) noexcept
{
  return mode == CombineMode::Literal ? "literal" : "halved";
}

double
median(std::vector<double> values)
{
  if (values.empty()) {
    throw Error("median of no values");
  }
  std::sort(values.begin(), values.end());
  std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) {
    return values[mid];
  }
  return (values[mid - 1] + values[mid]) / 2;
}

double
combine(double currentAvg, double historicalMedian, CombineMode mode) noexcept
{
  double sum = currentAvg + historicalMedian;
  return mode == CombineMode::Literal ? sum : sum / 2;
}

Row
PredictionTuple::toRow() const
{
  return {static_cast<double>(ts), plugId, householdId, houseId, predictedLoad};
}

namespace {

std::size_t
column(const Relation& r, const char* name)
{
  auto idx = resolve_attribute(r.columns, AttributeRef{"", name});
  if (!idx) {
    throw Error(std::string("prediction input lacks attribute ") + name);
  }
  return *idx;
}

} // namespace

std::optional<PredictionTuple>
predict_eval(PredictState& state, const Relation& window, Timestamp now)
{
  if (window.empty()) {
    return std::nullopt;
  }
  const auto& cfg = state.config;
  auto valueCol = column(window, "value");

  double sum = 0;
  std::size_t n = 0;
  for (const auto& row : window.rows) {
    if (auto v = as_number(row.at(valueCol))) {
      sum += *v;
      ++n;
    }
  }
  if (n == 0) {
    return std::nullopt;
  }
  double avg = sum / static_cast<double>(n);

  std::int64_t slot = now / cfg.slotMs;
  if (state.currentSlot && *state.currentSlot != slot) {
    state.history[*state.currentSlot % cfg.slotsPerPeriod()].push_back(state.currentAvg);
  }
  state.currentSlot = slot;
  state.currentAvg = avg;

  if (!state.nextEpoch) {
    state.nextEpoch = (now / cfg.horizonMs + 1) * cfg.horizonMs;
  }
  if (now < *state.nextEpoch) {
    return std::nullopt;
  }

  PredictionTuple p;
  p.ts = *state.nextEpoch;
  while (*state.nextEpoch <= now) {
    *state.nextEpoch += cfg.horizonMs;
  }
  const Row& latest = window.rows.back();
  p.plugId = latest.at(column(window, "plug_id"));
  p.householdId = latest.at(column(window, "household_id"));
  p.houseId = latest.at(column(window, "house_id"));

  auto it = state.history.find((slot + 2) % cfg.slotsPerPeriod());
  if (it == state.history.end() || it->second.empty()) {
    p.predictedLoad = avg;
  }
  else {
    p.predictedLoad = combine(avg, median(it->second), cfg.mode);
  }
  return p;
}

} // namespace cepnet
