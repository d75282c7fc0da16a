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

#ifndef CEPNET_OPERATORS_RELATION_HPP
#define CEPNET_OPERATORS_RELATION_HPP

#include "cepnet/packet/schema.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cepnet {

/// Row of an operator result; element 0 is the row timestamp.
using Row = std::vector<Value>;

/// Operator input or output: typed columns and ordered rows.
struct Relation
{
  std::vector<Column> columns;
  std::vector<Row> rows;

  /// Largest row timestamp, absent for an empty relation.
  std::optional<Timestamp>
  newestTs() const;

  bool
  empty() const noexcept
  {
    return rows.empty();
  }

  friend bool
  operator==(const Relation&, const Relation&) = default;
};

Timestamp
row_ts(const Row& row);

Relation
relation_from_tuples(std::vector<Column> columns, const std::vector<Tuple>& tuples);

/// Compact JSON text: {"columns":[["Q","name"],...],"rows":[[...],...]}.
std::string
relation_to_json(const Relation& r);

/// Throws cepnet::Error on malformed input.
Relation
relation_from_json(const std::string& text);

/// Header line of qualified column names followed by one CSV line per row.
std::string
relation_to_csv(const Relation& r);

} // namespace cepnet

#endif // CEPNET_OPERATORS_RELATION_HPP
