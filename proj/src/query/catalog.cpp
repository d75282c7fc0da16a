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

#include "cepnet/query/catalog.hpp"

namespace cepnet {

void
Catalog::addStream(StreamBinding binding)
{
  binding.schema.validate();
  auto alias = binding.alias;
  m_streams.insert_or_assign(alias, std::move(binding));
}

const StreamBinding*
Catalog::findStream(const std::string& alias) const
{
  auto it = m_streams.find(alias);
  return it == m_streams.end() ? nullptr : &it->second;
}

const StreamBinding*
Catalog::findByName(const Name& name) const
{
  for (const auto& [alias, b] : m_streams) {
    if (b.name == name) {
      return &b;
    }
  }
  return nullptr;
}

void
Catalog::setParam(const std::string& name, NamedParam value)
{
  m_params.insert_or_assign(name, value);
}

const NamedParam*
Catalog::findParam(const std::string& name) const
{
  auto it = m_params.find(name);
  return it == m_params.end() ? nullptr : &it->second;
}

Catalog
Catalog::defaults()
{
  Catalog c;
  c.addStream({"GPS_S1", Name::parse("/node/gps1"), gps_schema()});
  c.addStream({"GPS_S2", Name::parse("/node/gps2"), gps_schema()});
  c.addStream({"PLUG_S1", Name::parse("/node/plug1"), plug_schema()});
  c.addStream({"PLUG_S2", Name::parse("/node/plug2"), plug_schema()});
  c.setParam("cell_size", 0.05);
  c.setParam("area", Bounds{49.0, 51.0, 8.0, 9.5});
  return c;
}

} // namespace cepnet
