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

#ifndef CEPNET_COMMON_CSV_HPP
#define CEPNET_COMMON_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

namespace cepnet::csv {

/// Quotes a field when it contains a comma, a quote or a line break.
std::string
quote(std::string_view field);

std::string
join(const std::vector<std::string>& fields);

/// Splits one CSV record. Quoted fields may contain commas and doubled quotes.
/// Throws cepnet::Error on an unterminated quote.
std::vector<std::string>
split(std::string_view line);

} // namespace cepnet::csv

#endif // CEPNET_COMMON_CSV_HPP
