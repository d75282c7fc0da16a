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

#ifndef CEPNET_QUERY_CATALOG_HPP
#define CEPNET_QUERY_CATALOG_HPP

#include "cepnet/packet/name.hpp"
#include "cepnet/packet/schema.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace cepnet {

/// Geographic area used by the heat map operator.
struct Bounds
{
  double latMin = 0;
  double latMax = 0;
  double longMin = 0;
  double longMax = 0;

  friend bool
  operator==(const Bounds&, const Bounds&) = default;
};

using NamedParam = std::variant<double, Bounds>;

/// Maps a query alias (GPS_S1) to the stream name and schema it denotes.
struct StreamBinding
{
  std::string alias;
  Name name;
  Schema schema;
};

/// Stream aliases and named operator parameters visible to queries.
class Catalog
{
public:
  void
  addStream(StreamBinding binding);

  const StreamBinding*
  findStream(const std::string& alias) const;

  const StreamBinding*
  findByName(const Name& name) const;

  void
  setParam(const std::string& name, NamedParam value);

  const NamedParam*
  findParam(const std::string& name) const;

  const std::map<std::string, StreamBinding>&
  streams() const noexcept
  {
    return m_streams;
  }

  /// GPS_S1/GPS_S2 on /node/gps1,/node/gps2, PLUG_S1/PLUG_S2 on
  /// /node/plug1,/node/plug2, plus cell_size and area for heat maps.
  static Catalog
  defaults();

private:
  std::map<std::string, StreamBinding> m_streams;
  std::map<std::string, NamedParam> m_params;
};

} // namespace cepnet

#endif // CEPNET_QUERY_CATALOG_HPP
