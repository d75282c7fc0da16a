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

#include "cepnet/packet/name.hpp"

#include <algorithm>

namespace cepnet {

Name::Name(std::vector<std::string> components)
  : m_components(std::move(components))
{
  if (m_components.empty()) {
    throw Error("name must have at least one component");
  }
  for (const auto& c : m_components) {
    if (c.empty()) {
      throw Error("name component must not be empty");
    }
    if (c.find('/') != std::string::npos) {
      throw Error("name component must not contain '/': " + c);
    }
  }
}

Name
Name::parse(std::string_view uri)
{
  std::vector<std::string> components;
  std::size_t pos = 0;
  if (!uri.empty() && uri.front() == '/') {
    pos = 1;
  }
  while (pos <= uri.size()) {
    auto next = uri.find('/', pos);
    if (next == std::string_view::npos) {
      next = uri.size();
    }
    if (next > pos) {
      components.emplace_back(uri.substr(pos, next - pos));
    }
    else if (next < uri.size()) {
      throw Error("empty component in name: " + std::string(uri));
    }
    pos = next + 1;
  }
  return Name(std::move(components));
}

std::string
Name::toUri() const
{
  std::string uri;
  for (const auto& c : m_components) {
    uri += '/';
    uri += c;
  }
  return uri;
}

bool
Name::isPrefixOf(const Name& other) const noexcept
{
  if (m_components.size() > other.m_components.size()) {
    return false;
  }
  return std::equal(m_components.begin(), m_components.end(), other.m_components.begin());
}

Name
Name::append(std::string component) const
{
  auto components = m_components;
  components.push_back(std::move(component));
  return Name(std::move(components));
}

Name
Name::prefix(std::size_t n) const
{
  if (n == 0 || n > m_components.size()) {
    throw Error("prefix length out of range");
  }
  return Name({m_components.begin(), m_components.begin() + static_cast<std::ptrdiff_t>(n)});
}

} // namespace cepnet
