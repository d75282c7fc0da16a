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

#include "cepnet/packet/value.hpp"

#include <charconv>
#include <cmath>

namespace cepnet {

Value
value_from_text(std::string_view text)
{
  auto trimmed = text;
  while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t')) {
    trimmed.remove_prefix(1);
  }
  while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t' || trimmed.back() == '\r')) {
    trimmed.remove_suffix(1);
  }
  if (!trimmed.empty()) {
    const char* first = trimmed.data();
    if (*first == '+') {
      ++first;
    }
    double d = 0;
    auto [ptr, ec] = std::from_chars(first, trimmed.data() + trimmed.size(), d);
    if (ec == std::errc() && ptr == trimmed.data() + trimmed.size() && std::isfinite(d)) {
      return d;
    }
  }
  return std::string(text);
}

std::optional<double>
as_number(const Value& v) noexcept
{
  if (const double* d = std::get_if<double>(&v)) {
    return *d;
  }
  return std::nullopt;
}

std::string
to_text(const Value& v)
{
  if (const double* d = std::get_if<double>(&v)) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), *d);
    return std::string(buf, ptr);
  }
  return std::get<std::string>(v);
}

} // namespace cepnet
