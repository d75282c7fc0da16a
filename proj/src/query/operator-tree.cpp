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

#include "cepnet/query/operator-tree.hpp"

#include <algorithm>
#include <sstream>

namespace cepnet {

std::string
render(const Param& p)
{
  struct Visitor
  {
    std::string operator()(const Identifier& i) const { return i.text; }
    std::string operator()(const NumberLit& n) const { return n.text; }
    std::string operator()(const DurationLit& d) const { return std::to_string(d.magnitude) + d.unit; }
    std::string operator()(const AttributeRef& a) const { return render(a); }
    std::string operator()(const BoolExpr& e) const { return render(e); }
  };
  return std::visit(Visitor{}, p);
}

std::size_t
OperatorNode::count() const noexcept
{
  std::size_t n = 1;
  for (const auto& c : children) {
    n += c.count();
  }
  return n;
}

const OperatorNode*
OperatorNode::find(int preorderIndex) const noexcept
{
  if (index == preorderIndex) {
    return this;
  }
  for (const auto& c : children) {
    if (const auto* hit = c.find(preorderIndex)) {
      return hit;
    }
  }
  return nullptr;
}

OperatorNode*
OperatorNode::find(int preorderIndex) noexcept
{
  return const_cast<OperatorNode*>(std::as_const(*this).find(preorderIndex));
}

const OperatorNode*
OperatorNode::parentOf(int preorderIndex) const noexcept
{
  for (const auto& c : children) {
    if (c.index == preorderIndex) {
      return this;
    }
    if (const auto* hit = c.parentOf(preorderIndex)) {
      return hit;
    }
  }
  return nullptr;
}

namespace {

void
walk(const OperatorNode& n, int depth, const std::function<void(const OperatorNode&, int)>& fn)
{
  fn(n, depth);
  for (const auto& c : n.children) {
    walk(c, depth + 1, fn);
  }
}

} // namespace

void
for_each_preorder(const OperatorNode& root, const std::function<void(const OperatorNode&, int)>& fn)
{
  walk(root, 0, fn);
}

void
for_each_preorder(OperatorNode& root, const std::function<void(OperatorNode&)>& fn)
{
  fn(root);
  for (auto& c : root.children) {
    for_each_preorder(c, fn);
  }
}

void
number_preorder(OperatorNode& root)
{
  int next = 0;
  for_each_preorder(root, [&](OperatorNode& n) { n.index = next++; });
}

std::vector<std::string>
stream_aliases(const OperatorNode& root)
{
  std::vector<std::string> out;
  for_each_preorder(root, [&](const OperatorNode& n, int) {
    if (!n.children.empty() || n.params.empty()) {
      return;
    }
    if (const auto* alias = std::get_if<Identifier>(&n.params.front())) {
      if (std::find(out.begin(), out.end(), alias->text) == out.end()) {
        out.push_back(alias->text);
      }
    }
  });
  return out;
}

std::string
print_tree(const OperatorNode& root)
{
  std::ostringstream os;
  for_each_preorder(root, [&](const OperatorNode& n, int depth) {
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << "#" << n.index << " " << n.kind;
    if (n.format) {
      os << " [" << (*n.format == Format::Data ? "Data" : "DataStream") << "]";
    }
    for (const auto& p : n.params) {
      os << " " << render(p);
    }
    if (n.assignedNode) {
      os << " @" << *n.assignedNode;
    }
    os << "\n";
  });
  return os.str();
}

} // namespace cepnet
