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

#ifndef CEPNET_SIM_METRICS_HPP
#define CEPNET_SIM_METRICS_HPP

#include "cepnet/engine/node.hpp"

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace cepnet {

/// Result delivered to a consumer.
struct Notification
{
  std::int64_t arrivalUs = 0;
  std::int64_t originUs = 0; ///< emission of the raw tuple that caused it
  Timestamp ts = 0;
  std::string payload;

  friend bool
  operator==(const Notification&, const Notification&) = default;
};

struct QueryMetrics
{
  std::string id;
  double graphMs = 0;
  double placementMs = 0;
  double communicationMs = 0; ///< mean over notifications, NaN without any
  double totalMs = 0;
  std::vector<Notification> notifications;
  std::size_t controlPackets = 0; ///< packets sent by the issuing consumer
  std::size_t deployTimeouts = 0;
  std::size_t nacks = 0;
  std::size_t resultHops = 0; ///< intermediate result packets sent broker to broker
  NodeId coordinator;
  std::map<NodeId, std::size_t> operatorCounts;
  std::string plan;
};

struct NodeMetrics
{
  NodeId id;
  NodeCounters counters;
  std::size_t faceDrops = 0;
};

struct Metrics
{
  std::vector<QueryMetrics> queries;
  std::vector<NodeMetrics> nodes;
  std::size_t reorderedRows = 0;

  const QueryMetrics*
  query(const std::string& id) const;
};

/// Orders ids with embedded numbers numerically: q2 before q10.
bool
natural_less(const std::string& a, const std::string& b);

inline constexpr const char* METRICS_HEADER = "query,total_ms,graph_ms,placement_ms,communication_ms";

/// Comment line describing the time sources, the header, then one row per
/// query in id order.
void
write_metrics_csv(std::ostream& out, const Metrics& metrics);

void
emit_metrics(const Metrics& metrics, const std::string& path);

struct MetricsRow
{
  std::string query;
  std::array<double, 4> values{}; ///< total, graph, placement, communication
};

/// Skips '#' lines. Throws Error on a wrong header or malformed row.
std::vector<MetricsRow>
read_metrics_csv(std::istream& in, const std::string& source = "<input>");

std::vector<MetricsRow>
read_metrics_csv(const std::string& path);

struct Interval
{
  std::size_t n = 0;
  double mean = 0;
  double lo = 0; ///< two-sided Student-t interval; equals mean when n < 2
  double hi = 0;
};

Interval
confidence_interval(const std::vector<double>& samples, double level = 0.95);

struct QuerySummary
{
  std::string query;
  std::array<Interval, 4> columns;
};

/// Per query and column over several runs; NaN samples are left out.
std::vector<QuerySummary>
summarize_metrics(const std::vector<std::vector<MetricsRow>>& runs, double level = 0.95);

} // namespace cepnet

#endif // CEPNET_SIM_METRICS_HPP
