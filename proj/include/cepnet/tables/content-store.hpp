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

#ifndef CEPNET_TABLES_CONTENT_STORE_HPP
#define CEPNET_TABLES_CONTENT_STORE_HPP

#include "cepnet/packet/name.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace cepnet {

struct CsEntry
{
  std::string key;
  std::string payload;
  Timestamp logicalTs = 0;

  friend bool
  operator==(const CsEntry&, const CsEntry&) = default;
};

/// Content store keyed by name URI or normalized query text. Each key keeps
/// only its newest entry by logical timestamp.
class ContentStore
{
public:
  /// With a capacity, inserting past it evicts the entry with the oldest
  /// logical timestamp (ties broken by key).
  explicit
  ContentStore(std::optional<std::size_t> capacity = std::nullopt);

  /// Hit only when the entry exists and is at least as new as `minTs`.
  std::optional<CsEntry>
  lookup(const std::string& key, Timestamp minTs = 0) const;

  /// Classic CCN match: the entry whose name has `prefix` as a prefix
  /// (exact match preferred, otherwise the smallest matching key).
  std::optional<CsEntry>
  lookupPrefix(const Name& prefix, Timestamp minTs = 0) const;

  /// Older-than-stored inserts are ignored.
  void
  insert(std::string key, std::string payload, Timestamp logicalTs);

  bool
  erase(const std::string& key);

  std::size_t
  size() const noexcept
  {
    return m_entries.size();
  }

  const std::map<std::string, CsEntry>&
  entries() const noexcept
  {
    return m_entries;
  }

private:
  std::optional<std::size_t> m_capacity;
  std::map<std::string, CsEntry> m_entries;
  std::set<std::pair<Timestamp, std::string>> m_byAge;
};

} // namespace cepnet

#endif // CEPNET_TABLES_CONTENT_STORE_HPP
