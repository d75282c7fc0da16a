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

#include "cepnet/tables/pit.hpp"

namespace cepnet {

PitEntry*
Pit::lookup(const std::string& key)
{
  auto it = m_entries.find(key);
  return it == m_entries.end() ? nullptr : &it->second;
}

const PitEntry*
Pit::lookup(const std::string& key) const
{
  auto it = m_entries.find(key);
  return it == m_entries.end() ? nullptr : &it->second;
}

bool
Pit::addFace(const std::string& key, FaceId face, PitKind kind, Timestamp now)
{
  auto [it, created] = m_entries.try_emplace(key);
  if (created) {
    it->second.key = key;
    it->second.kind = kind;
    it->second.createdTs = now;
  }
  return it->second.faces.insert(face).second;
}

bool
Pit::removeFace(const std::string& key, FaceId face)
{
  auto it = m_entries.find(key);
  if (it == m_entries.end()) {
    return false;
  }
  bool removed = it->second.faces.erase(face) > 0;
  if (it->second.faces.empty()) {
    m_entries.erase(it);
  }
  return removed;
}

bool
Pit::remove(const std::string& key)
{
  return m_entries.erase(key) > 0;
}

} // namespace cepnet
