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

#include "cepnet/tables/fib.hpp"

namespace cepnet {

void
Fib::addRoute(const Name& prefix, FaceId face)
{
  auto [it, created] = m_entries.try_emplace(prefix.toUri(), Slot{prefix, {}});
  ++it->second.refs[face];
}

bool
Fib::removeRoute(const Name& prefix, FaceId face)
{
  auto it = m_entries.find(prefix.toUri());
  if (it == m_entries.end()) {
    return false;
  }
  auto ref = it->second.refs.find(face);
  if (ref == it->second.refs.end()) {
    return false;
  }
  if (--ref->second == 0) {
    it->second.refs.erase(ref);
  }
  if (it->second.refs.empty()) {
    m_entries.erase(it);
  }
  return true;
}

FibEntry
Fib::toEntry(const Slot& s)
{
  FibEntry e{s.prefix, {}};
  for (const auto& [face, count] : s.refs) {
    e.faces.insert(face);
  }
  return e;
}

std::optional<FibEntry>
Fib::longestPrefix(const Name& name) const
{
  for (std::size_t n = name.size(); n >= 1; --n) {
    auto it = m_entries.find(name.prefix(n).toUri());
    if (it != m_entries.end()) {
      return toEntry(it->second);
    }
  }
  return std::nullopt;
}

std::optional<FibEntry>
Fib::findExact(const Name& prefix) const
{
  auto it = m_entries.find(prefix.toUri());
  if (it == m_entries.end()) {
    return std::nullopt;
  }
  return toEntry(it->second);
}

std::vector<FibEntry>
Fib::entries() const
{
  std::vector<FibEntry> out;
  out.reserve(m_entries.size());
  for (const auto& [uri, slot] : m_entries) {
    out.push_back(toEntry(slot));
  }
  return out;
}

} // namespace cepnet
