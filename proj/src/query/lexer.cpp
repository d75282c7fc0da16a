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

#include "cepnet/query/lexer.hpp"

#include <cctype>

namespace cepnet {

const char*
to_string(TokenKind kind) noexcept
{
  switch (kind) {
    case TokenKind::Ident: return "IDENT";
    case TokenKind::Number: return "NUM";
    case TokenKind::Duration: return "DURATION";
    case TokenKind::Time: return "TIME";
    case TokenKind::Attribute: return "ATTR";
    case TokenKind::LParen: return "LPAREN";
    case TokenKind::RParen: return "RPAREN";
    case TokenKind::Comma: return "COMMA";
    case TokenKind::Dot: return "DOT";
    case TokenKind::Lt: return "LT";
    case TokenKind::Gt: return "GT";
    case TokenKind::Eq: return "EQ";
    case TokenKind::Le: return "LE";
    case TokenKind::Ge: return "GE";
    case TokenKind::And: return "AND";
    case TokenKind::Or: return "OR";
    case TokenKind::Arrow: return "ARROW";
    case TokenKind::End: return "END";
  }
  return "?";
}

namespace {

bool
is_ident_start(char c)
{
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool
is_ident_char(char c)
{
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool
is_digit(char c)
{
  return c >= '0' && c <= '9';
}

// nn:nn:nn.nnn
bool
is_time_at(std::string_view q, std::size_t i)
{
  static constexpr std::string_view shape = "dd:dd:dd.ddd";
  if (i + shape.size() > q.size()) {
    return false;
  }
  for (std::size_t k = 0; k < shape.size(); ++k) {
    char c = q[i + k];
    if (shape[k] == 'd' ? !is_digit(c) : c != shape[k]) {
      return false;
    }
  }
  return i + shape.size() == q.size() || !is_ident_char(q[i + shape.size()]);
}

} // namespace

std::vector<Token>
tokenize(std::string_view q)
{
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto push = [&](TokenKind k, std::size_t start, std::size_t end) {
    tokens.push_back({k, std::string(q.substr(start, end - start)), start});
  };

  while (i < q.size()) {
    char c = q[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (is_ident_start(c)) {
      while (i < q.size() && is_ident_char(q[i])) {
        ++i;
      }
      push(TokenKind::Ident, start, i);
    }
    else if (is_digit(c) || (c == '-' && i + 1 < q.size() && is_digit(q[i + 1]))) {
      if (is_time_at(q, i)) {
        i += 12;
        push(TokenKind::Time, start, i);
        continue;
      }
      ++i;
      while (i < q.size() && is_digit(q[i])) {
        ++i;
      }
      if (i + 1 < q.size() && q[i] == '.' && is_digit(q[i + 1])) {
        ++i;
        while (i < q.size() && is_digit(q[i])) {
          ++i;
        }
      }
      if (i < q.size() && (q[i] == 's' || q[i] == 'm') &&
          (i + 1 == q.size() || !is_ident_char(q[i + 1]))) {
        ++i;
        push(TokenKind::Duration, start, i);
      }
      else if (i < q.size() && is_ident_char(q[i])) {
        // latinNumber such as 4x: an identifier that happens to start with a digit
        while (i < q.size() && is_ident_char(q[i])) {
          ++i;
        }
        push(TokenKind::Ident, start, i);
      }
      else {
        push(TokenKind::Number, start, i);
      }
    }
    else if (c == '\'') {
      auto close = q.find('\'', i + 1);
      if (close == std::string_view::npos) {
        throw LexError("unterminated quote", start);
      }
      if (close == i + 1) {
        throw LexError("empty attribute name", start);
      }
      tokens.push_back({TokenKind::Attribute, std::string(q.substr(i + 1, close - i - 1)), start});
      i = close + 1;
    }
    else if (c == '<' || c == '>') {
      bool withEq = i + 1 < q.size() && q[i + 1] == '=';
      i += withEq ? 2 : 1;
      TokenKind k = c == '<' ? (withEq ? TokenKind::Le : TokenKind::Lt)
                             : (withEq ? TokenKind::Ge : TokenKind::Gt);
      push(k, start, i);
    }
    else if (c == '-' && i + 1 < q.size() && q[i + 1] == '>') {
      i += 2;
      push(TokenKind::Arrow, start, i);
    }
    else if (q.substr(i, 3) == "\xE2\x86\x92") {
      i += 3;
      push(TokenKind::Arrow, start, i);
    }
    else {
      TokenKind k;
      switch (c) {
        case '(': k = TokenKind::LParen; break;
        case ')': k = TokenKind::RParen; break;
        case ',': k = TokenKind::Comma; break;
        case '.': k = TokenKind::Dot; break;
        case '=': k = TokenKind::Eq; break;
        case '&': k = TokenKind::And; break;
        case '|': k = TokenKind::Or; break;
        default:
          throw LexError(std::string("illegal character '") + c + "'", start);
      }
      ++i;
      push(k, start, i);
    }
  }
  tokens.push_back({TokenKind::End, "", q.size()});
  return tokens;
}

} // namespace cepnet
