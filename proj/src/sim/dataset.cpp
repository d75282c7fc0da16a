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

#include "cepnet/sim/dataset.hpp"
#include "cepnet/common/csv.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace cepnet {

namespace {

std::string
trim_cr(std::string line)
{
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  return line;
}

std::string
fixed(double v, int digits)
{
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

} // namespace

Dataset
parse_dataset(std::istream& in, const Schema& schema, const std::string& source)
{
  Dataset ds;
  ds.schema = schema;
  std::string line;
  if (!std::getline(in, line)) {
    throw SchemaMismatch(source + ": empty file, expected header " + csv::join(schema.attributeNames));
  }
  auto header = csv::split(trim_cr(line));
  for (auto& h : header) {
    h.erase(0, h.find_first_not_of(' '));
    h.erase(h.find_last_not_of(' ') + 1);
  }
  if (header != schema.attributeNames) {
    std::string missing;
    for (const auto& a : schema.attributeNames) {
      if (std::find(header.begin(), header.end(), a) == header.end()) {
        missing += (missing.empty() ? "" : ",") + a;
      }
    }
    throw SchemaMismatch(source + ": header '" + csv::join(header) + "' does not match schema '" +
                         schema.schemaId + "' (" + csv::join(schema.attributeNames) + ")" +
                         (missing.empty() ? "" : "; missing " + missing));
  }

  int lineNo = 1;
  Timestamp newest = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineNo;
    line = trim_cr(line);
    if (line.empty()) {
      continue;
    }
    auto cells = csv::split(line);
    std::string where = source + ":" + std::to_string(lineNo);
    if (cells.size() != schema.attributeNames.size()) {
      throw SchemaMismatch(where + ": expected " + std::to_string(schema.attributeNames.size()) +
                           " fields, got " + std::to_string(cells.size()));
    }
    Tuple t;
    t.schemaId = schema.schemaId;
    for (const auto& c : cells) {
      t.values.push_back(value_from_text(c));
    }
    auto ts = as_number(t.values[0]);
    if (!ts || *ts != std::floor(*ts)) {
      throw DatasetError(where + ": ts must be an integer, got '" + cells[0] + "'");
    }
    t.ts = static_cast<Timestamp>(*ts);
    if (!first && t.ts < newest) {
      ++ds.reordered;
    }
    newest = first ? t.ts : std::max(newest, t.ts);
    first = false;
    ds.tuples.push_back(std::move(t));
  }
  std::stable_sort(ds.tuples.begin(), ds.tuples.end(), [](const Tuple& a, const Tuple& b) { return a.ts < b.ts; });
  return ds;
}

Dataset
load_dataset(const std::string& path, const Schema& schema)
{
  std::ifstream in(path);
  if (!in) {
    throw DatasetError("cannot open dataset '" + path + "'");
  }
  return parse_dataset(in, schema, path);
}

void
write_dataset(std::ostream& out, const Dataset& dataset)
{
  out << csv::join(dataset.schema.attributeNames) << '\n';
  for (const auto& t : dataset.tuples) {
    std::vector<std::string> cells;
    for (const auto& v : t.values) {
      cells.push_back(to_text(v));
    }
    out << csv::join(cells) << '\n';
  }
}

const Schema&
schema_by_id(const std::string& id)
{
  if (id == gps_schema().schemaId) {
    return gps_schema();
  }
  if (id == plug_schema().schemaId) {
    return plug_schema();
  }
  throw DatasetError("unknown schema '" + id + "'");
}

std::vector<ScheduledPacket>
replay_dataset(const ReplayBinding& binding, const Dataset& dataset)
{
  if (binding.rate <= 0) {
    throw DatasetError("replay rate must be positive");
  }
  std::vector<ScheduledPacket> out;
  out.reserve(dataset.tuples.size());
  for (const auto& t : dataset.tuples) {
    double ms = binding.offsetMs + static_cast<double>(t.ts) / binding.rate;
    out.push_back({std::llround(ms * 1000.0), DataStream{binding.name, t}});
  }
  return out;
}

std::vector<ScheduledPacket>
replay_dataset(const ReplayBinding& binding)
{
  return replay_dataset(binding, load_dataset(binding.csvPath, binding.schema));
}

std::uint64_t
SeededRandom::next() noexcept
{
  std::uint64_t z = (m_state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double
SeededRandom::uniform() noexcept
{
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Dataset
generate_gps(std::uint64_t seed, std::size_t rows, const GpsProfile& profile)
{
  SeededRandom rng(seed);
  Dataset ds;
  ds.schema = gps_schema();
  double lat = profile.latitude;
  double lon = profile.longitude;
  double distance = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    Timestamp ts = profile.startTs + static_cast<Timestamp>(i) * profile.intervalMs;
    double dLat = rng.uniform(-profile.jitter, profile.jitter);
    double dLon = rng.uniform(-profile.jitter, profile.jitter);
    lat += dLat;
    lon += dLon;
    double step = std::hypot(dLat, dLon) * 111'000.0;
    distance += step;
    double speed = step / (static_cast<double>(profile.intervalMs) / 1000.0);
    std::vector<std::string> cells{std::to_string(ts),
                                   profile.sensorId,
                                   fixed(lat, 6),
                                   fixed(lon, 6),
                                   fixed(rng.uniform(140, 160), 1),
                                   fixed(rng.uniform(3, 15), 1),
                                   fixed(distance, 2),
                                   fixed(speed, 2)};
    Tuple t{ts, ds.schema.schemaId, {}};
    for (const auto& c : cells) {
      t.values.push_back(value_from_text(c));
    }
    ds.tuples.push_back(std::move(t));
  }
  return ds;
}

Dataset
generate_plug(std::uint64_t seed, std::size_t rows, const PlugProfile& profile)
{
  SeededRandom rng(seed);
  Dataset ds;
  ds.schema = plug_schema();
  for (std::size_t i = 0; i < rows; ++i) {
    Timestamp ts = profile.startTs + static_cast<Timestamp>(i) * profile.intervalMs;
    double phase = 2 * std::numbers::pi * static_cast<double>(ts) / profile.periodMs;
    double value = profile.base + profile.amplitude * std::sin(phase) + profile.ramp * static_cast<double>(i);
    if (profile.noise > 0) {
      value += rng.uniform(-profile.noise, profile.noise);
    }
    std::vector<std::string> cells{std::to_string(ts), std::to_string(i), fixed(std::max(0.0, value), 3), "1",
                                   profile.plugId, profile.householdId, profile.houseId};
    Tuple t{ts, ds.schema.schemaId, {}};
    for (const auto& c : cells) {
      t.values.push_back(value_from_text(c));
    }
    ds.tuples.push_back(std::move(t));
  }
  return ds;
}

} // namespace cepnet
