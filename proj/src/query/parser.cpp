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

#include "cepnet/query/parser.hpp"
#include "cepnet/query/lexer.hpp"
#include "cepnet/query/nfn.hpp"

#include <cctype>
#include <charconv>
#include <memory>

namespace cepnet {

namespace {

constexpr int MAX_DEPTH = 200;

// Syntax tree before operators are resolved against the registry.
struct CallAst;

struct ArgAst
{
  enum class Kind { Call, Ident, Number, Duration, Time, Attr, Bool };

  Kind kind = Kind::Ident;
  std::size_t offset = 0;
  bool arrowBefore = false;
  std::string text;
  AttributeRef attr;
  BoolExpr expr;
  std::shared_ptr<CallAst> call;
};

struct CallAst
{
  std::string name;
  std::size_t offset = 0;
  std::vector<ArgAst> args;
};

class SyntaxParser
{
public:
  explicit SyntaxParser(std::vector<Token> tokens)
    : m_tokens(std::move(tokens))
  {
  }

  std::shared_ptr<CallAst>
  parseQuery()
  {
    if (peek().kind == TokenKind::End) {
      throw ParseError("empty query", 0);
    }
    if (peek().kind != TokenKind::Ident || peek(1).kind != TokenKind::LParen) {
      throw ParseError("expected an operator such as WINDOW(", peek().offset);
    }
    auto call = parseCall(0);
    if (peek().kind != TokenKind::End) {
      throw ParseError("unexpected " + describe(peek()) + " after the query", peek().offset);
    }
    return call;
  }

private:
  const Token&
  peek(std::size_t ahead = 0) const
  {
    return m_tokens[std::min(m_pos + ahead, m_tokens.size() - 1)];
  }

  const Token&
  next()
  {
    const Token& t = peek();
    if (m_pos < m_tokens.size() - 1) {
      ++m_pos;
    }
    return t;
  }

  static std::string
  describe(const Token& t)
  {
    if (t.kind == TokenKind::End) {
      return "end of query";
    }
    return "'" + t.text + "'";
  }

  static bool
  isComparison(TokenKind k)
  {
    return k == TokenKind::Lt || k == TokenKind::Gt || k == TokenKind::Eq || k == TokenKind::Le ||
           k == TokenKind::Ge;
  }

  std::shared_ptr<CallAst>
  parseCall(int depth)
  {
    if (depth > MAX_DEPTH) {
      throw ParseError("operators nested too deeply", peek().offset);
    }
    auto call = std::make_shared<CallAst>();
    const Token& name = next();
    call->name = name.text;
    call->offset = name.offset;
    next(); // (
    if (peek().kind == TokenKind::RParen) {
      next();
      return call;
    }
    bool arrow = false;
    while (true) {
      auto arg = parseArg(depth);
      arg.arrowBefore = arrow;
      arrow = false;
      call->args.push_back(std::move(arg));

      const Token& t = peek();
      if (t.kind == TokenKind::RParen) {
        next();
        return call;
      }
      if (t.kind == TokenKind::Comma || t.kind == TokenKind::Arrow) {
        arrow = t.kind == TokenKind::Arrow;
        next();
        if (peek().kind == TokenKind::RParen) {
          throw ParseError("expected an argument before ')'", peek().offset);
        }
        continue;
      }
      if (t.kind == TokenKind::End) {
        throw ParseError("missing ')' for " + call->name + " opened", call->offset);
      }
      // a nested operator may be followed by the next argument without a comma
      if (call->args.back().kind != ArgAst::Kind::Call) {
        throw ParseError("expected ',' or ')' but found " + describe(t), t.offset);
      }
    }
  }

  Operand
  parseOperand()
  {
    const Token& t = peek();
    if (t.kind == TokenKind::Attribute) {
      next();
      return AttributeRef{"", t.text};
    }
    if (t.kind == TokenKind::Ident && peek(1).kind == TokenKind::Dot) {
      next();
      next();
      if (peek().kind != TokenKind::Attribute) {
        throw ParseError("expected a quoted attribute after '.'", peek().offset);
      }
      return AttributeRef{t.text, next().text};
    }
    if (t.kind == TokenKind::Ident) {
      next();
      return AttributeRef{"", t.text};
    }
    if (t.kind == TokenKind::Number) {
      next();
      double v = 0;
      std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      return NumberLit{v, t.text};
    }
    throw ParseError("expected an attribute or number but found " + describe(t), t.offset);
  }

  BoolExpr
  parseComparison(Operand lhs)
  {
    const Token& op = peek();
    if (!isComparison(op.kind)) {
      throw ParseError("expected a comparison operator but found " + describe(op), op.offset);
    }
    next();
    CompareOp cmp = op.kind == TokenKind::Lt   ? CompareOp::Lt
                    : op.kind == TokenKind::Gt ? CompareOp::Gt
                    : op.kind == TokenKind::Le ? CompareOp::Le
                    : op.kind == TokenKind::Ge ? CompareOp::Ge
                                               : CompareOp::Eq;
    return BoolExpr::compare(std::move(lhs), cmp, parseOperand());
  }

  BoolExpr
  parseConjunction(Operand first)
  {
    BoolExpr e = parseComparison(std::move(first));
    while (peek().kind == TokenKind::And) {
      next();
      e = BoolExpr::combine(BoolExpr::Kind::And, std::move(e), parseComparison(parseOperand()));
    }
    return e;
  }

  BoolExpr
  parseBoolExpr(Operand first)
  {
    BoolExpr e = parseConjunction(std::move(first));
    while (peek().kind == TokenKind::Or) {
      next();
      e = BoolExpr::combine(BoolExpr::Kind::Or, std::move(e), parseConjunction(parseOperand()));
    }
    return e;
  }

  ArgAst
  parseArg(int depth)
  {
    const Token& t = peek();
    ArgAst arg;
    arg.offset = t.offset;

    if (t.kind == TokenKind::Ident && peek(1).kind == TokenKind::LParen) {
      arg.kind = ArgAst::Kind::Call;
      arg.call = parseCall(depth + 1);
      return arg;
    }
    if (t.kind == TokenKind::Duration || t.kind == TokenKind::Time) {
      next();
      arg.kind = t.kind == TokenKind::Duration ? ArgAst::Kind::Duration : ArgAst::Kind::Time;
      arg.text = t.text;
      return arg;
    }
    if (t.kind == TokenKind::Ident && t.text == "Data" && peek(1).kind == TokenKind::Ident &&
        peek(1).text == "Stream") {
      next();
      next();
      arg.kind = ArgAst::Kind::Ident;
      arg.text = "DataStream";
      return arg;
    }
    if (t.kind != TokenKind::Attribute && t.kind != TokenKind::Ident && t.kind != TokenKind::Number) {
      throw ParseError("unexpected " + describe(t), t.offset);
    }

    Operand operand = parseOperand();
    if (isComparison(peek().kind)) {
      arg.kind = ArgAst::Kind::Bool;
      arg.expr = parseBoolExpr(std::move(operand));
      return arg;
    }
    if (const auto* n = std::get_if<NumberLit>(&operand)) {
      arg.kind = ArgAst::Kind::Number;
      arg.text = n->text;
      return arg;
    }
    const auto& ref = std::get<AttributeRef>(operand);
    if (t.kind == TokenKind::Ident && ref.qualifier.empty()) {
      arg.kind = ArgAst::Kind::Ident;
      arg.text = ref.name;
      return arg;
    }
    arg.kind = ArgAst::Kind::Attr;
    arg.attr = ref;
    return arg;
  }

  std::vector<Token> m_tokens;
  std::size_t m_pos = 0;
};

std::string
upper(std::string_view s)
{
  std::string out(s);
  for (auto& c : out) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

std::optional<std::int64_t>
positive_integer(std::string_view text)
{
  std::int64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || v < 1) {
    return std::nullopt;
  }
  return v;
}

class Builder
{
public:
  Builder(const Catalog& catalog, const OperatorRegistry& registry)
    : m_catalog(catalog)
    , m_registry(registry)
  {
  }

  OperatorNode
  build(const CallAst& call)
  {
    const OperatorSpec* spec = m_registry.find(call.name);
    if (spec == nullptr) {
      throw SemanticError("unknown operator " + call.name, call.offset);
    }
    OperatorNode node;
    node.kind = spec->keyword;

    std::vector<const ArgAst*> args;
    for (const auto& a : call.args) {
      if (a.kind == ArgAst::Kind::Time) {
        throw SemanticError("time literal " + a.text + " is not accepted by any operator", a.offset);
      }
      args.push_back(&a);
    }
    if (spec->acceptsFormat && !args.empty() && args.front()->kind == ArgAst::Kind::Ident) {
      auto f = upper(args.front()->text);
      if (f == "DATA" || f == "DATASTREAM") {
        node.format = f == "DATA" ? Format::Data : Format::DataStream;
        args.erase(args.begin());
      }
    }
    if (args.size() != spec->signature.size()) {
      throw SemanticError(spec->keyword + " expects " + std::to_string(spec->signature.size()) +
                            " arguments but got " + std::to_string(args.size()),
                          call.offset);
    }

    for (std::size_t i = 0; i < args.size(); ++i) {
      const ArgAst& a = *args[i];
      Slot slot = spec->signature[i];
      if (a.arrowBefore &&
          !(spec->arrowSeparated && slot == Slot::Child && i > 0 && spec->signature[i - 1] == Slot::Child)) {
        throw SemanticError("'->' may only separate the operands of " + std::string("SEQUENCE"), a.offset);
      }
      if (slot == Slot::Child) {
        if (a.kind != ArgAst::Kind::Call) {
          throw SemanticError(spec->keyword + " argument " + std::to_string(i + 1) + " must be an operator",
                              a.offset);
        }
        node.children.push_back(build(*a.call));
      }
      else {
        node.params.push_back(convert(*spec, slot, a));
      }
    }

    std::vector<Column> scope;
    for (const auto& c : node.children) {
      scope.insert(scope.end(), c.output.begin(), c.output.end());
    }
    for (std::size_t i = 0, p = 0; i < args.size(); ++i) {
      Slot slot = spec->signature[i];
      if (slot == Slot::Child) {
        continue;
      }
      const Param& param = node.params[p++];
      std::vector<AttributeRef> refs;
      if (slot == Slot::Condition) {
        refs = std::get<BoolExpr>(param).attributes();
      }
      else if (slot == Slot::Attribute) {
        refs.push_back(std::get<AttributeRef>(param));
      }
      for (const auto& r : refs) {
        if (!resolve_attribute(scope, r)) {
          throw SemanticError("unknown attribute " + render(r) + " in " + spec->keyword, args[i]->offset);
        }
      }
    }
    if (spec->check) {
      spec->check(node, m_catalog, call.offset);
    }
    node.output = spec->output(node, m_catalog);
    return node;
  }

private:
  Param
  convert(const OperatorSpec& spec, Slot slot, const ArgAst& a)
  {
    auto fail = [&](const std::string& what) -> SemanticError {
      return SemanticError(spec.keyword + " " + what, a.offset);
    };
    switch (slot) {
      case Slot::Stream:
        if (a.kind != ArgAst::Kind::Ident) {
          throw fail("expects a stream alias");
        }
        if (m_catalog.findStream(a.text) == nullptr) {
          throw fail("refers to unknown stream " + a.text);
        }
        return Identifier{a.text};

      case Slot::Extent:
      case Slot::Horizon: {
        if (a.kind == ArgAst::Kind::Duration) {
          auto v = positive_integer(std::string_view(a.text).substr(0, a.text.size() - 1));
          if (!v) {
            throw fail("needs a positive whole " + std::string(to_string(slot)) + ", got " + a.text);
          }
          return DurationLit{*v, a.text.back()};
        }
        if (slot == Slot::Extent && a.kind == ArgAst::Kind::Number) {
          if (!positive_integer(a.text)) {
            throw fail("needs a positive tuple count, got " + a.text);
          }
          return NumberLit{std::stod(a.text), a.text};
        }
        throw fail("has a non-numeric " + std::string(to_string(slot)) +
                   (a.text.empty() ? std::string() : " " + a.text));
      }

      case Slot::Condition:
        if (a.kind != ArgAst::Kind::Bool) {
          throw fail("expects a condition such as 'latitude'<50");
        }
        return a.expr;

      case Slot::Attribute:
        if (a.kind == ArgAst::Kind::Attr) {
          return a.attr;
        }
        if (a.kind == ArgAst::Kind::Ident) {
          return AttributeRef{"", a.text};
        }
        throw fail("expects an attribute name");

      case Slot::Scalar: {
        if (a.kind == ArgAst::Kind::Number) {
          double v = std::stod(a.text);
          if (!(v > 0)) {
            throw fail("needs a positive number, got " + a.text);
          }
          return NumberLit{v, a.text};
        }
        auto name = namedArg(a);
        const auto* p = name ? m_catalog.findParam(*name) : nullptr;
        if (p == nullptr || !std::holds_alternative<double>(*p)) {
          throw fail("expects a number or numeric parameter");
        }
        return Identifier{*name};
      }

      case Slot::Area: {
        auto name = namedArg(a);
        const auto* p = name ? m_catalog.findParam(*name) : nullptr;
        if (p == nullptr || !std::holds_alternative<Bounds>(*p)) {
          throw fail("expects an area parameter");
        }
        return Identifier{*name};
      }

      case Slot::Child:
        break;
    }
    throw fail("has an unsupported argument");
  }

  static std::optional<std::string>
  namedArg(const ArgAst& a)
  {
    if (a.kind == ArgAst::Kind::Ident) {
      return a.text;
    }
    if (a.kind == ArgAst::Kind::Attr && a.attr.qualifier.empty()) {
      return a.attr.name;
    }
    return std::nullopt;
  }

  const Catalog& m_catalog;
  const OperatorRegistry& m_registry;
};

} // namespace

OperatorNode
parse_query(std::string_view query, const Catalog& catalog, const OperatorRegistry& registry)
{
  SyntaxParser syntax(tokenize(query));
  auto ast = syntax.parseQuery();
  OperatorNode root = Builder(catalog, registry).build(*ast);
  number_preorder(root);
  return root;
}

OperatorNode
create_operator_graph(std::string_view query, const Catalog& catalog, const OperatorRegistry& registry)
{
  OperatorNode root = parse_query(query, catalog, registry);
  refresh_nfn(root, registry);
  return root;
}

std::string
render_query(const OperatorNode& root, const OperatorRegistry& registry)
{
  const auto* spec = registry.find(root.kind);
  if (spec == nullptr) {
    throw Error("no operator registered for " + root.kind);
  }
  std::string out = root.kind + "(";
  if (root.format) {
    out += *root.format == Format::Data ? "Data," : "DataStream,";
  }
  std::size_t param = 0;
  std::size_t child = 0;
  for (std::size_t i = 0; i < spec->signature.size(); ++i) {
    Slot slot = spec->signature[i];
    if (i > 0) {
      bool arrow = spec->arrowSeparated && slot == Slot::Child && spec->signature[i - 1] == Slot::Child;
      out += arrow ? "->" : ",";
    }
    if (slot == Slot::Child) {
      out += render_query(root.children.at(child++), registry);
    }
    else {
      out += render_arg(root.params.at(param++), slot);
    }
  }
  return out + ")";
}

} // namespace cepnet
