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

#ifndef CEPNET_TABLES_DUMP_HPP
#define CEPNET_TABLES_DUMP_HPP

#include "cepnet/tables/content-store.hpp"
#include "cepnet/tables/fib.hpp"
#include "cepnet/tables/pit.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cepnet {

// CSV renderings of the forwarding tables. Faces are space separated inside
// their column.

std::string
dump_csv(const ContentStore& cs);

std::string
dump_csv(const Pit& pit);

std::string
dump_csv(const Fib& fib);

/// One "[title]" section of a node dump file.
struct DumpSection
{
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Parses a node dump: lines starting with '#' are comments, "[title]" opens a
/// section whose first line is the CSV header.
std::vector<DumpSection>
parse_dump(std::istream& in);

/// Column-aligned text table.
std::string
format_table(const DumpSection& section);

} // namespace cepnet

#endif // CEPNET_TABLES_DUMP_HPP
