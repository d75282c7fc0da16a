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

#include "cepnet/common/csv.hpp"
#include "cepnet/common.hpp"

namespace cepnet::csv {

std::string
quote(std::string_view field)
{
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string
join(const std::vector<std::string>& fields)
{
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += quote(fields[i]);
  }
  return out;
}

std::vector<std::string>
split(std::string_view line)
{
  if (!line.empty() && line.back() == '\r') {
    line.remove_suffix(1);
  }
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        }
        else {
          quoted = false;
        }
      }
      else {
        current += c;
      }
    }
    else if (c == '"') {
      quoted = true;
    }
    else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    }
    else {
      current += c;
    }
  }
  if (quoted) {
    throw Error("unterminated quote in CSV record");
  }
  fields.push_back(std::move(current));
  return fields;
}

} // namespace cepnet::csv
