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

#ifndef CEPNET_SIM_SIMULATOR_HPP
#define CEPNET_SIM_SIMULATOR_HPP

#include "cepnet/engine/node.hpp"
#include "cepnet/sim/metrics.hpp"
#include "cepnet/sim/scenario.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cepnet {

/// Simulated service time of a broker for one packet: its processing delay
/// plus a fixed cost per evaluated operator and a cost per row touched.
struct CostModel
{
  std::map<std::string, double> operatorMs{
    {"WINDOW", 0.02}, {"FILTER", 0.02}, {"JOIN", 0.05}, {"SEQUENCE", 0.05}, {"SUM", 0.02},
    {"MIN", 0.02},    {"MAX", 0.02},    {"AVG", 0.02},  {"COUNT", 0.02},    {"HEATMAP", 2.0},
    {"PREDICT", 3.0},
  };
  double defaultOperatorMs = 0.05;
  double perRowMs = 0.001;

  double
  serviceMs(double processingDelayMs, const Outcome& outcome) const;
};

struct SimOptions
{
  CostModel cost;
  bool recordTrace = true;
  bool dumpNodes = false; ///< fill SimResult::dumps when the run ends
};

struct SimResult
{
  Metrics metrics;
  std::vector<std::string> trace;
  std::uint64_t traceHash = 0;
  std::int64_t endUs = 0;
  std::size_t events = 0;
  std::size_t lostToFailures = 0; ///< packets that reached a failed node
  std::size_t causalityViolations = 0; ///< receives earlier than send time plus link delay
  std::map<NodeId, std::string> dumps;
};

/// Runs a scenario to completion on a logical microsecond clock. Equal
/// timestamps are ordered by scheduling sequence, so a given spec always
/// yields the same trace.
SimResult
run_scenario(const ScenarioSpec& spec, const SimOptions& options = {});

/// FNV-1a over the newline-joined trace.
std::uint64_t
trace_hash(const std::vector<std::string>& trace);

} // namespace cepnet

#endif // CEPNET_SIM_SIMULATOR_HPP
