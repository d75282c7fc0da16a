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

#ifndef CEPNET_SIM_DATASET_HPP
#define CEPNET_SIM_DATASET_HPP

#include "cepnet/packet/name.hpp"
#include "cepnet/packet/packet.hpp"
#include "cepnet/packet/schema.hpp"

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace cepnet {

class DatasetError : public Error
{
public:
  using Error::Error;
};

/// CSV header does not match the declared schema.
class SchemaMismatch : public DatasetError
{
public:
  using DatasetError::DatasetError;
};

struct Dataset
{
  Schema schema;
  std::vector<Tuple> tuples; ///< ts order
  std::size_t reordered = 0; ///< rows that arrived before an older row
};

/// Header must list exactly the schema attributes in order. Rows out of ts
/// order are stably sorted and counted in `reordered`.
Dataset
parse_dataset(std::istream& in, const Schema& schema, const std::string& source = "<input>");

Dataset
load_dataset(const std::string& path, const Schema& schema);

void
write_dataset(std::ostream& out, const Dataset& dataset);

/// Schema by id: "gps" or "plug". Throws DatasetError otherwise.
const Schema&
schema_by_id(const std::string& id);

struct ReplayBinding
{
  std::string alias;
  NodeId producer;
  Name name{std::vector<std::string>{"stream"}};
  Schema schema;
  std::string csvPath;
  double rate = 1;       ///< dataset ms per simulated ms
  double offsetMs = 0;   ///< added to every emission time
};

struct ScheduledPacket
{
  std::int64_t emitUs = 0;
  DataStream packet;
};

/// One packet per tuple, emitted at offset + ts / rate.
std::vector<ScheduledPacket>
replay_dataset(const ReplayBinding& binding, const Dataset& dataset);

std::vector<ScheduledPacket>
replay_dataset(const ReplayBinding& binding);

/// Deterministic 64-bit generator (splitmix64) with a portable uniform draw.
class SeededRandom
{
public:
  explicit SeededRandom(std::uint64_t seed)
    : m_state(seed)
  {
  }

  std::uint64_t
  next() noexcept;

  /// Uniform in [0, 1).
  double
  uniform() noexcept;

  double
  uniform(double lo, double hi) noexcept
  {
    return lo + (hi - lo) * uniform();
  }

private:
  std::uint64_t m_state;
};

struct GpsProfile
{
  std::string sensorId = "s1";
  std::int64_t startTs = 1000;
  std::int64_t intervalMs = 1000;
  double latitude = 49.87;
  double longitude = 8.65;
  double jitter = 0.0002;
};

/// Random walk around the profile position; ts start at startTs, one row per interval.
Dataset
generate_gps(std::uint64_t seed, std::size_t rows, const GpsProfile& profile = {});

struct PlugProfile
{
  std::string plugId = "1";
  std::string householdId = "0";
  std::string houseId = "0";
  std::int64_t startTs = 1000;
  std::int64_t intervalMs = 1000;
  double base = 22;
  double amplitude = 8;  ///< sine swing over `periodMs`
  double periodMs = 600'000;
  double noise = 1;
  double ramp = 0;       ///< added per row
};

Dataset
generate_plug(std::uint64_t seed, std::size_t rows, const PlugProfile& profile = {});

} // namespace cepnet

#endif // CEPNET_SIM_DATASET_HPP
