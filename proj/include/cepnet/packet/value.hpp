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

#ifndef CEPNET_PACKET_VALUE_HPP
#define CEPNET_PACKET_VALUE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace cepnet {

/// Attribute value: numeric when the source text parses as a number, text otherwise.
using Value = std::variant<double, std::string>;

/// Classifies raw text (e.g. a CSV cell) as number or text.
Value
value_from_text(std::string_view text);

std::optional<double>
as_number(const Value& v) noexcept;

/// Shortest text that round-trips the value.
std::string
to_text(const Value& v);

} // namespace cepnet

#endif // CEPNET_PACKET_VALUE_HPP
