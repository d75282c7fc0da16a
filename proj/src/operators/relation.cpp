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

#include "cepnet/operators/relation.hpp"
#include "cepnet/common/csv.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace cepnet {

using nlohmann::json;

Timestamp
row_ts(const Row& row)
{
  auto ts = row.empty() ? std::nullopt : as_number(row.front());
  if (!ts) {
    throw Error("row has no numeric timestamp");
  }
  return static_cast<Timestamp>(*ts);
}

std::optional<Timestamp>
Relation::newestTs() const
{
  std::optional<Timestamp> best;
  for (const auto& row : rows) {
    auto ts = row_ts(row);
    if (!best || ts > *best) {
      best = ts;
    }
  }
  return best;
}

Relation
relation_from_tuples(std::vector<Column> columns, const std::vector<Tuple>& tuples)
{
  Relation r{std::move(columns), {}};
  r.rows.reserve(tuples.size());
  for (const auto& t : tuples) {
    r.rows.push_back(t.values);
  }
  return r;
}

std::string
relation_to_json(const Relation& r)
{
  json cols = json::array();
  for (const auto& c : r.columns) {
    json col = {c.qualifier, c.name};
    if (!c.synonyms.empty()) {
      col.push_back(c.synonyms);
    }
    cols.push_back(std::move(col));
  }
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr = json::array();
    for (const auto& v : row) {
      if (const double* d = std::get_if<double>(&v)) {
        jr.push_back(*d);
      }
      else {
        jr.push_back(std::get<std::string>(v));
      }
    }
    rows.push_back(std::move(jr));
  }
  return json{{"columns", std::move(cols)}, {"rows", std::move(rows)}}.dump();
}

Relation
relation_from_json(const std::string& text)
{
  try {
    auto j = json::parse(text);
    Relation r;
    for (const auto& c : j.at("columns")) {
      Column col{c.at(0).get<std::string>(), c.at(1).get<std::string>()};
      if (c.size() > 2) {
        col.synonyms = c.at(2).get<std::vector<std::string>>();
      }
      r.columns.push_back(std::move(col));
    }
    for (const auto& jr : j.at("rows")) {
      Row row;
      for (const auto& v : jr) {
        if (v.is_number()) {
          row.emplace_back(v.get<double>());
        }
        else {
          row.emplace_back(v.get<std::string>());
        }
      }
      r.rows.push_back(std::move(row));
    }
    return r;
  }
  catch (const json::exception& e) {
    throw Error(std::string("bad relation encoding: ") + e.what());
  }
}

std::string
relation_to_csv(const Relation& r)
{
  std::vector<std::string> header;
  for (const auto& c : r.columns) {
    header.push_back(c.qualifier.empty() ? c.name : c.qualifier + "." + c.name);
  }
  std::string out = csv::join(header) + "\n";
  for (const auto& row : r.rows) {
    std::vector<std::string> cells;
    std::transform(row.begin(), row.end(), std::back_inserter(cells), [](const Value& v) { return to_text(v); });
    out += csv::join(cells) + "\n";
  }
  return out;
}

} // namespace cepnet
