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

#include "cepnet/query/normalize.hpp"
#include "cepnet/common.hpp"

#include <cctype>
#include <cstdio>

namespace cepnet {

namespace {

bool
is_word(char c)
{
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

} // namespace

std::string
normalize_query(std::string_view query)
{
  std::string out;
  out.reserve(query.size());
  bool quoted = false;
  bool pendingSpace = false;
  for (char c : query) {
    if (!quoted && std::isspace(static_cast<unsigned char>(c))) {
      pendingSpace = true;
      continue;
    }
    if (pendingSpace && !out.empty() && is_word(out.back()) && is_word(c)) {
      out += ' ';
    }
    pendingSpace = false;
    if (c == '\'') {
      quoted = !quoted;
    }
    out += c;
  }
  return out;
}

std::string
query_hash(std::string_view query)
{
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(normalize_query(query))));
  return buf;
}

} // namespace cepnet
