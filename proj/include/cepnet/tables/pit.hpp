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

#ifndef CEPNET_TABLES_PIT_HPP
#define CEPNET_TABLES_PIT_HPP

#include "cepnet/common.hpp"

#include <map>
#include <set>
#include <string>

namespace cepnet {

enum class PitKind {
  Name,  ///< classic Interest, keyed by name URI
  Query, ///< standing query interest, keyed by normalized query text
};

struct PitEntry
{
  std::string key;
  PitKind kind = PitKind::Name;
  std::set<FaceId> faces;
  Timestamp createdTs = 0;
  /// newest input timestamp folded into the query
  Timestamp lastResultTs = -1;
  /// per input stream (URI), newest timestamp folded into the query
  std::map<std::string, Timestamp> lastStreamTs;
};

/// Pending interest table holding both classic interests and query interests.
class Pit
{
public:
  PitEntry*
  lookup(const std::string& key);

  const PitEntry*
  lookup(const std::string& key) const;

  /// Creates the entry if needed. Returns false when the face was already recorded.
  bool
  addFace(const std::string& key, FaceId face, PitKind kind = PitKind::Query, Timestamp now = 0);

  /// Removes one face; the entry is deleted once no faces remain.
  /// Returns true when the face was present.
  bool
  removeFace(const std::string& key, FaceId face);

  bool
  remove(const std::string& key);

  std::size_t
  size() const noexcept
  {
    return m_entries.size();
  }

  const std::map<std::string, PitEntry>&
  entries() const noexcept
  {
    return m_entries;
  }

  std::map<std::string, PitEntry>&
  entries() noexcept
  {
    return m_entries;
  }

private:
  std::map<std::string, PitEntry> m_entries;
};

} // namespace cepnet

#endif // CEPNET_TABLES_PIT_HPP
