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

#include "cepnet/tables/content-store.hpp"

namespace cepnet {

ContentStore::ContentStore(std::optional<std::size_t> capacity)
  : m_capacity(capacity)
{
}

std::optional<CsEntry>
ContentStore::lookup(const std::string& key, Timestamp minTs) const
{
  auto it = m_entries.find(key);
  if (it == m_entries.end() || it->second.logicalTs < minTs) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<CsEntry>
ContentStore::lookupPrefix(const Name& prefix, Timestamp minTs) const
{
  auto uri = prefix.toUri();
  if (auto exact = lookup(uri, minTs)) {
    return exact;
  }
  auto childPrefix = uri + "/";
  for (auto it = m_entries.lower_bound(childPrefix);
       it != m_entries.end() && it->first.compare(0, childPrefix.size(), childPrefix) == 0; ++it) {
    if (it->second.logicalTs >= minTs) {
      return it->second;
    }
  }
  return std::nullopt;
}

void
ContentStore::insert(std::string key, std::string payload, Timestamp logicalTs)
{
  auto it = m_entries.find(key);
  if (it != m_entries.end()) {
    if (logicalTs < it->second.logicalTs) {
      return;
    }
    m_byAge.erase({it->second.logicalTs, key});
    it->second.payload = std::move(payload);
    it->second.logicalTs = logicalTs;
    m_byAge.insert({logicalTs, key});
    return;
  }
  m_byAge.insert({logicalTs, key});
  m_entries.emplace(key, CsEntry{key, std::move(payload), logicalTs});
  if (m_capacity && m_entries.size() > *m_capacity) {
    auto oldest = m_byAge.begin();
    m_entries.erase(oldest->second);
    m_byAge.erase(oldest);
  }
}

bool
ContentStore::erase(const std::string& key)
{
  auto it = m_entries.find(key);
  if (it == m_entries.end()) {
    return false;
  }
  m_byAge.erase({it->second.logicalTs, key});
  m_entries.erase(it);
  return true;
}

} // namespace cepnet
