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

#ifndef CEPNET_QUERY_NORMALIZE_HPP
#define CEPNET_QUERY_NORMALIZE_HPP

#include <string>
#include <string_view>

namespace cepnet {

/// Drops whitespace outside quotes, keeping a single space where it separates
/// two identifier characters. Used as the PIT and CS key of a query.
std::string
normalize_query(std::string_view query);

/// 16 hex digits identifying a normalized query in /state names.
std::string
query_hash(std::string_view query);

} // namespace cepnet

#endif // CEPNET_QUERY_NORMALIZE_HPP
