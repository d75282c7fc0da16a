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

#ifndef CEPNET_PACKET_NAME_HPP
#define CEPNET_PACKET_NAME_HPP

#include "cepnet/common.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cepnet {

/// Hierarchical content name, e.g. /node/nodeA/temperature.
///
/// Always holds at least one component; no component is empty or contains '/'.
class Name
{
public:
  class Error : public cepnet::Error
  {
  public:
    using cepnet::Error::Error;
  };

  explicit
  Name(std::vector<std::string> components);

  /// Parses a URI such as "/node/gps1". A missing leading slash is tolerated.
  static Name
  parse(std::string_view uri);

  const std::vector<std::string>&
  components() const noexcept
  {
    return m_components;
  }

  std::size_t
  size() const noexcept
  {
    return m_components.size();
  }

  const std::string&
  at(std::size_t i) const
  {
    return m_components.at(i);
  }

  std::string
  toUri() const;

  bool
  isPrefixOf(const Name& other) const noexcept;

  Name
  append(std::string component) const;

  /// Leading `n` components; n must be in [1, size()].
  Name
  prefix(std::size_t n) const;

  friend bool
  operator==(const Name&, const Name&) = default;

  friend auto
  operator<=>(const Name&, const Name&) = default;

private:
  std::vector<std::string> m_components;
};

/// True iff `prefix` is a leading sub-list of `name`.
inline bool
is_prefix_of(const Name& prefix, const Name& name) noexcept
{
  return prefix.isPrefixOf(name);
}

} // namespace cepnet

#endif // CEPNET_PACKET_NAME_HPP
