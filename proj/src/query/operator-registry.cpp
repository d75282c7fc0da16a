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

#include "cepnet/query/operator-registry.hpp"
#include "cepnet/query/errors.hpp"

#include <algorithm>
#include <cctype>

namespace cepnet {

const char*
to_string(Slot slot) noexcept
{
  switch (slot) {
    case Slot::Child: return "operator";
    case Slot::Stream: return "stream";
    case Slot::Extent: return "window size";
    case Slot::Condition: return "condition";
    case Slot::Attribute: return "attribute";
    case Slot::Horizon: return "horizon";
    case Slot::Scalar: return "number";
    case Slot::Area: return "area";
  }
  return "?";
}

std::size_t
OperatorSpec::childCount() const
{
  return static_cast<std::size_t>(std::count(signature.begin(), signature.end(), Slot::Child));
}

namespace {

std::string
upper(std::string_view s)
{
  std::string out(s);
  for (auto& c : out) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

std::vector<Column>
pass_through(const OperatorNode& n, const Catalog&)
{
  return n.children.at(0).output;
}

std::vector<Column>
window_output(const OperatorNode& n, const Catalog& catalog)
{
  const auto& alias = std::get<Identifier>(n.params.at(0)).text;
  return columns_of(catalog.findStream(alias)->schema, alias);
}

std::vector<Column>
join_output(const OperatorNode& n, const Catalog&)
{
  const auto& l = n.children.at(0).output;
  const auto& r = n.children.at(1).output;
  std::vector<Column> out(l.begin(), l.end());
  out.insert(out.end(), r.begin() + 1, r.end());
  return out;
}

void
require_window_child(const OperatorNode& n, std::size_t offset)
{
  if (n.children.at(0).kind != "WINDOW") {
    throw SemanticError(n.kind + " must be applied to a WINDOW", offset);
  }
}

void
require_columns(const OperatorNode& n, const std::vector<std::string>& names, std::size_t offset)
{
  const auto& in = n.children.at(0).output;
  for (const auto& name : names) {
    if (!resolve_attribute(in, AttributeRef{"", name})) {
      throw SemanticError(n.kind + " input lacks attribute '" + name + "'", offset);
    }
  }
}

OperatorSpec
aggregate(const std::string& keyword, const std::string& service)
{
  OperatorSpec s;
  s.keyword = keyword;
  s.service = service;
  s.signature = {Slot::Attribute, Slot::Child};
  s.check = [](const OperatorNode& n, const Catalog&, std::size_t offset) {
    require_window_child(n, offset);
  };
  s.output = [](const OperatorNode& n, const Catalog&) {
    std::string name = n.kind;
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const auto& ts = n.children.at(0).output.at(0);
    return std::vector<Column>{ts, Column{ts.qualifier, name}};
  };
  return s;
}

} // namespace

void
OperatorRegistry::add(OperatorSpec spec)
{
  auto key = upper(spec.keyword);
  spec.keyword = key;
  if (!m_specs.emplace(key, std::move(spec)).second) {
    throw Error("operator " + key + " is already registered");
  }
}

const OperatorSpec*
OperatorRegistry::find(std::string_view keyword) const
{
  auto it = m_specs.find(upper(keyword));
  return it == m_specs.end() ? nullptr : &it->second;
}

std::vector<std::string>
OperatorRegistry::keywords() const
{
  std::vector<std::string> out;
  for (const auto& [k, _] : m_specs) {
    out.push_back(k);
  }
  return out;
}

OperatorRegistry
OperatorRegistry::makeBuiltin()
{
  OperatorRegistry r;

  OperatorSpec window;
  window.keyword = "WINDOW";
  window.service = "Window";
  window.signature = {Slot::Stream, Slot::Extent};
  window.acceptsFormat = false;
  window.output = window_output;
  r.add(window);

  OperatorSpec filter;
  filter.keyword = "FILTER";
  filter.service = "Filter";
  filter.signature = {Slot::Child, Slot::Condition};
  filter.output = pass_through;
  r.add(filter);

  OperatorSpec join;
  join.keyword = "JOIN";
  join.service = "Join";
  join.signature = {Slot::Child, Slot::Child, Slot::Condition};
  join.output = join_output;
  r.add(join);

  OperatorSpec sequence;
  sequence.keyword = "SEQUENCE";
  sequence.service = "Sequence";
  sequence.signature = {Slot::Child, Slot::Child};
  sequence.arrowSeparated = true;
  sequence.output = [](const OperatorNode& n, const Catalog&) {
    const auto& ts = n.children.at(0).output.at(0);
    return std::vector<Column>{ts, Column{ts.qualifier, "sequence"}};
  };
  r.add(sequence);

  r.add(aggregate("SUM", "Sum"));
  r.add(aggregate("MIN", "Min"));
  r.add(aggregate("MAX", "Max"));
  r.add(aggregate("AVG", "Avg"));
  r.add(aggregate("COUNT", "Count"));

  OperatorSpec heatmap;
  heatmap.keyword = "HEATMAP";
  heatmap.service = "Heatmap";
  heatmap.signature = {Slot::Scalar, Slot::Area, Slot::Child};
  heatmap.check = [](const OperatorNode& n, const Catalog&, std::size_t offset) {
    require_columns(n, {"latitude", "longitude"}, offset);
  };
  heatmap.output = [](const OperatorNode& n, const Catalog&) {
    const auto& ts = n.children.at(0).output.at(0);
    std::vector<Column> out{ts};
    for (const char* c : {"hc", "vc", "skipped", "grid"}) {
      out.push_back(Column{"", c});
    }
    return out;
  };
  r.add(heatmap);

  OperatorSpec predict;
  predict.keyword = "PREDICT";
  predict.service = "Predict";
  predict.signature = {Slot::Horizon, Slot::Child};
  predict.check = [](const OperatorNode& n, const Catalog&, std::size_t offset) {
    require_window_child(n, offset);
    if (!std::holds_alternative<DurationLit>(n.children[0].params.at(1))) {
      throw SemanticError("PREDICT needs a time-based WINDOW", offset);
    }
    require_columns(n, {"value", "plug_id", "household_id", "house_id"}, offset);
  };
  predict.output = [](const OperatorNode& n, const Catalog&) {
    const auto& q = n.children.at(0).output.at(0).qualifier;
    return std::vector<Column>{{q, "ts"},
                               {q, "plug_id"},
                               {q, "household_id"},
                               {q, "house_id"},
                               {q, "predicted_load", {"load"}}};
  };
  r.add(predict);

  return r;
}

const OperatorRegistry&
OperatorRegistry::builtin()
{
  static const OperatorRegistry r = makeBuiltin();
  return r;
}

std::string
render_arg(const Param& p, Slot slot)
{
  if ((slot == Slot::Scalar || slot == Slot::Area) && std::holds_alternative<Identifier>(p)) {
    return "'" + std::get<Identifier>(p).text + "'";
  }
  return render(p);
}

} // namespace cepnet
