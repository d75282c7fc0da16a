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

#ifndef CEPNET_QUERY_LEXER_HPP
#define CEPNET_QUERY_LEXER_HPP

#include "cepnet/query/errors.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cepnet {

enum class TokenKind {
  Ident,     ///< operator keyword, stream alias, format, bare attribute
  Number,    ///< 50, 0.25, -3
  Duration,  ///< 4s, 1m
  Time,      ///< nn:nn:nn.nnn
  Attribute, ///< 'latitude'
  LParen,
  RParen,
  Comma,
  Dot,
  Lt,
  Gt,
  Eq,
  Le,
  Ge,
  And,
  Or,
  Arrow, ///< -> or U+2192
  End,
};

struct Token
{
  TokenKind kind;
  std::string text; ///< attribute tokens hold the unquoted name
  std::size_t offset;

  friend bool
  operator==(const Token&, const Token&) = default;
};

const char*
to_string(TokenKind kind) noexcept;

/// Splits query text into tokens; the last token is always End.
/// Throws LexError on an unterminated quote or an illegal character.
std::vector<Token>
tokenize(std::string_view query);

} // namespace cepnet

#endif // CEPNET_QUERY_LEXER_HPP
