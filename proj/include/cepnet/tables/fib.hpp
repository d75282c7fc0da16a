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

#ifndef CEPNET_TABLES_FIB_HPP
#define CEPNET_TABLES_FIB_HPP

#include "cepnet/packet/name.hpp"

#include <map>
#include <optional>
#include <set>

namespace cepnet {

struct FibEntry
{
  Name prefix;
  std::set<FaceId> faces;

  friend bool
  operator==(const FibEntry&, const FibEntry&) = default;
};

/// Forwarding information base. Routes are reference counted per
/// (prefix, face) so independent users can add and withdraw the same route.
class Fib
{
public:
  void
  addRoute(const Name& prefix, FaceId face);

  /// Drops one reference; the face disappears when its count reaches zero and
  /// the entry disappears with its last face.
  bool
  removeRoute(const Name& prefix, FaceId face);

  /// Entry with the longest prefix of `name`, if any.
  std::optional<FibEntry>
  longestPrefix(const Name& name) const;

  std::optional<FibEntry>
  findExact(const Name& prefix) const;

  std::size_t
  size() const noexcept
  {
    return m_entries.size();
  }

  std::vector<FibEntry>
  entries() const;

private:
  struct Slot
  {
    Name prefix;
    std::map<FaceId, int> refs;
  };

  static FibEntry
  toEntry(const Slot& s);

  std::map<std::string, Slot> m_entries;
};

} // namespace cepnet

#endif // CEPNET_TABLES_FIB_HPP
