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

#ifndef CEPNET_QUERY_ERRORS_HPP
#define CEPNET_QUERY_ERRORS_HPP

#include "cepnet/common.hpp"

namespace cepnet {

/// Query rejected by the lexer, parser or semantic checks. Carries the byte
/// offset into the query text where the problem was found.
class QueryError : public Error
{
public:
  QueryError(const std::string& message, std::size_t offset)
    : Error(message + " at offset " + std::to_string(offset))
    , m_offset(offset)
  {
  }

  std::size_t
  offset() const noexcept
  {
    return m_offset;
  }

private:
  std::size_t m_offset;
};

class ParseError : public QueryError
{
public:
  using QueryError::QueryError;
};

class LexError : public ParseError
{
public:
  using ParseError::ParseError;
};

class SemanticError : public QueryError
{
public:
  using QueryError::QueryError;
};

} // namespace cepnet

#endif // CEPNET_QUERY_ERRORS_HPP
