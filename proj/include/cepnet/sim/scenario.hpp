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

#ifndef CEPNET_SIM_SCENARIO_HPP
#define CEPNET_SIM_SCENARIO_HPP

#include "cepnet/operators/predict.hpp"
#include "cepnet/placement/assign.hpp"
#include "cepnet/query/catalog.hpp"
#include "cepnet/sim/dataset.hpp"
#include "cepnet/sim/topology.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cepnet {

struct StreamSpec
{
  ReplayBinding binding;
  std::size_t generateRows = 0; ///< > 0: synthesize rows from the seed instead of reading csvPath
};

struct QuerySpec
{
  std::string id;
  NodeId issuer;          ///< consumer node, or a broker with a local consumer
  std::string text;
  std::int64_t startMs = 0;
  std::optional<std::int64_t> stopMs;
  PlacementMode mode = PlacementMode::Centralized;
  std::optional<double> pollIntervalMs; ///< re-issue instead of staying subscribed
};

struct Failure
{
  NodeId node;
  std::int64_t atMs = 0;
};

struct ScenarioSpec
{
  std::string source;
  TopologyConfig topology;
  std::vector<StreamSpec> streams;
  std::vector<QuerySpec> queries;
  std::vector<Failure> failures;
  std::map<std::string, NamedParam> params;
  std::uint64_t seed = 1;
  CombineMode combine = CombineMode::Literal;
  std::int64_t predictPeriodMs = 86'400'000;
  double deployTimeoutMs = 100;
  std::optional<std::int64_t> endMs;

  /// Catalog with the default parameters, the scenario's parameters and its stream bindings.
  Catalog
  catalog() const;

  const StreamSpec*
  stream(const std::string& alias) const;

  /// Throws ConfigError: unknown nodes, wrong roles, duplicate ids,
  /// queries referring to unbound aliases.
  void
  validate() const;
};

/// Line format ('#' starts a comment):
///   topology preset:<name> | <path>
///   seed <n>
///   combine literal|halved
///   predict-period <ms|duration>
///   deploy-timeout <ms>
///   end <ms>
///   param <name> <number> | param <name> <latMin> <latMax> <longMin> <longMax>
///   stream <alias> <producer> <name> <schema> <csv-path|generate:<rows>> [rate=<r>] [offset=<ms>]
///   query <id> <issuer> <start_ms> <stop_ms|-> centralized|distributed <query text>
///   poll <query-id> <interval_ms>
///   fail <node> <at_ms>
/// Relative paths resolve against `baseDir`.
ScenarioSpec
parse_scenario(std::istream& in, const std::string& source = "<input>", const std::string& baseDir = ".");

ScenarioSpec
load_scenario(const std::string& path);

} // namespace cepnet

#endif // CEPNET_SIM_SCENARIO_HPP
