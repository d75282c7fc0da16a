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

#include "cepnet/tables/dump.hpp"
#include "cepnet/common/csv.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace cepnet {

namespace {

std::string
faces_text(const std::set<FaceId>& faces)
{
  std::string out;
  for (auto f : faces) {
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(f);
  }
  return out;
}

} // namespace

std::string
dump_csv(const ContentStore& cs)
{
  std::string out = "key,ts\n";
  for (const auto& [key, e] : cs.entries()) {
    out += csv::join({key, std::to_string(e.logicalTs)}) + "\n";
  }
  return out;
}

std::string
dump_csv(const Pit& pit)
{
  std::string out = "key,kind,faces,ts\n";
  for (const auto& [key, e] : pit.entries()) {
    out += csv::join({key, e.kind == PitKind::Query ? "query" : "name", faces_text(e.faces),
                      std::to_string(e.lastResultTs)}) +
           "\n";
  }
  return out;
}

std::string
dump_csv(const Fib& fib)
{
  std::string out = "prefix,faces\n";
  for (const auto& e : fib.entries()) {
    out += csv::join({e.prefix.toUri(), faces_text(e.faces)}) + "\n";
  }
  return out;
}

std::vector<DumpSection>
parse_dump(std::istream& in)
{
  std::vector<DumpSection> sections;
  std::string line;
  bool expectHeader = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') {
      continue;
    }
    if (line.front() == '[' && line.back() == ']') {
      sections.push_back({line.substr(1, line.size() - 2), {}, {}});
      expectHeader = true;
      continue;
    }
    if (sections.empty()) {
      throw Error("dump line outside of a section: " + line);
    }
    if (expectHeader) {
      sections.back().header = csv::split(line);
      expectHeader = false;
    }
    else {
      sections.back().rows.push_back(csv::split(line));
    }
  }
  return sections;
}

std::string
format_table(const DumpSection& section)
{
  std::vector<std::size_t> widths(section.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  };
  widen(section.header);
  for (const auto& r : section.rows) {
    widen(r);
  }
  std::ostringstream os;
  os << section.title << "\n";
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < widths.size(); ++i) {
      std::string cell = i < row.size() ? row[i] : "";
      if (i + 1 < widths.size()) {
        cell.resize(widths[i], ' ');
        cell += "  ";
      }
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') {
      line.pop_back();
    }
    os << "  " << line << "\n";
  };
  emit(section.header);
  for (const auto& r : section.rows) {
    emit(r);
  }
  return os.str();
}

} // namespace cepnet
