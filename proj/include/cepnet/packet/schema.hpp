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

#ifndef CEPNET_PACKET_SCHEMA_HPP
#define CEPNET_PACKET_SCHEMA_HPP

#include "cepnet/common.hpp"
#include "cepnet/packet/value.hpp"

#include <string>
#include <vector>

namespace cepnet {

/// Named tuple layout. The first attribute is always "ts".
struct Schema
{
  std::string schemaId;
  std::vector<std::string> attributeNames;

  /// Throws cepnet::Error if the first attribute is not "ts" or names repeat.
  void
  validate() const;

  std::optional<std::size_t>
  indexOf(std::string_view attribute) const;

  friend bool
  operator==(const Schema&, const Schema&) = default;
};

/// GPS stream: ts,s_id,latitude,longitude,altitude,accuracy,distance,speed.
const Schema&
gps_schema();

/// Smart-plug stream: ts,id,value,property,plug_id,household_id,house_id.
const Schema&
plug_schema();

/// Timestamped record <ts, a1..am>. values[0] carries ts.
struct Tuple
{
  Timestamp ts = 0;
  std::string schemaId;
  std::vector<Value> values;

  friend bool
  operator==(const Tuple&, const Tuple&) = default;
};

/// Checks the value count against the schema and that values[0] equals ts.
void
validate_tuple(const Tuple& tuple, const Schema& schema);

/// One output column of an operator: attribute name, the stream alias it came
/// from (may be empty) and accepted synonyms.
struct Column
{
  std::string qualifier;
  std::string name;
  std::vector<std::string> synonyms = {};

  bool
  matches(std::string_view qual, std::string_view attr) const;

  friend bool
  operator==(const Column&, const Column&) = default;
};

std::vector<Column>
columns_of(const Schema& schema, const std::string& qualifier);

} // namespace cepnet

#endif // CEPNET_PACKET_SCHEMA_HPP
