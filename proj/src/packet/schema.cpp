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

#include "cepnet/packet/schema.hpp"

#include <algorithm>
#include <set>

namespace cepnet {

void
Schema::validate() const
{
  if (attributeNames.empty() || attributeNames.front() != "ts") {
    throw Error("schema '" + schemaId + "' must start with attribute ts");
  }
  std::set<std::string> seen;
  for (const auto& a : attributeNames) {
    if (!seen.insert(a).second) {
      throw Error("schema '" + schemaId + "' repeats attribute " + a);
    }
  }
}

std::optional<std::size_t>
Schema::indexOf(std::string_view attribute) const
{
  auto it = std::find(attributeNames.begin(), attributeNames.end(), attribute);
  if (it == attributeNames.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - attributeNames.begin());
}

const Schema&
gps_schema()
{
  static const Schema s{"gps",
                        {"ts", "s_id", "latitude", "longitude", "altitude", "accuracy", "distance", "speed"}};
  return s;
}

const Schema&
plug_schema()
{
  static const Schema s{"plug", {"ts", "id", "value", "property", "plug_id", "household_id", "house_id"}};
  return s;
}

void
validate_tuple(const Tuple& tuple, const Schema& schema)
{
  if (tuple.values.size() != schema.attributeNames.size()) {
    throw Error("tuple has " + std::to_string(tuple.values.size()) + " values, schema '" +
                schema.schemaId + "' expects " + std::to_string(schema.attributeNames.size()));
  }
  auto ts = as_number(tuple.values.front());
  if (!ts || static_cast<Timestamp>(*ts) != tuple.ts) {
    throw Error("first tuple value must equal the tuple timestamp");
  }
}

bool
Column::matches(std::string_view qual, std::string_view attr) const
{
  if (!qual.empty() && qual != qualifier) {
    return false;
  }
  return name == attr || std::find(synonyms.begin(), synonyms.end(), attr) != synonyms.end();
}

std::vector<Column>
columns_of(const Schema& schema, const std::string& qualifier)
{
  std::vector<Column> cols;
  cols.reserve(schema.attributeNames.size());
  for (const auto& a : schema.attributeNames) {
    cols.push_back({qualifier, a});
  }
  return cols;
}

} // namespace cepnet
