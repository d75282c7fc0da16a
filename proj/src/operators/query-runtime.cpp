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

#include "cepnet/operators/query-runtime.hpp"

#include <algorithm>
#include <functional>

namespace cepnet {

QueryRuntime::QueryRuntime(OperatorNode tree, std::set<int> hosted, EvalContext ctx,
                           const EvaluatorRegistry& registry)
  : m_tree(std::move(tree))
  , m_hosted(std::move(hosted))
  , m_ctx(std::move(ctx))
{
  std::function<void(const OperatorNode&, int)> index = [&](const OperatorNode& n, int parent) {
    m_nodes[n.index] = &n;
    m_parent[n.index] = parent;
    for (const auto& c : n.children) {
      index(c, n.index);
    }
    if (m_hosted.count(n.index)) {
      m_postOrder.push_back(n.index);
    }
  };
  index(m_tree, -1);
  for (int i : m_hosted) {
    if (!m_nodes.count(i)) {
      throw Error("hosted operator " + std::to_string(i) + " is not in the tree");
    }
    m_evals[i] = registry.create(*m_nodes[i], m_ctx);
  }
}

std::vector<Name>
QueryRuntime::inputStreams() const
{
  std::vector<Name> out;
  for (int i : m_postOrder) {
    const auto* n = m_nodes.at(i);
    if (n->children.empty() && !n->params.empty()) {
      if (const auto* alias = std::get_if<Identifier>(&n->params[0])) {
        if (const auto* s = m_ctx.catalog.findStream(alias->text)) {
          if (std::find(out.begin(), out.end(), s->name) == out.end()) {
            out.push_back(s->name);
          }
        }
      }
    }
  }
  return out;
}

std::vector<int>
QueryRuntime::remoteInputs() const
{
  std::vector<int> out;
  for (int i : m_postOrder) {
    for (const auto& c : m_nodes.at(i)->children) {
      if (!m_hosted.count(c.index)) {
        out.push_back(c.index);
      }
    }
  }
  return out;
}

std::vector<int>
QueryRuntime::outputs() const
{
  std::vector<int> out;
  for (int i : m_postOrder) {
    int p = m_parent.at(i);
    if (p < 0 || !m_hosted.count(p)) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<FragmentOutput>
QueryRuntime::onTuple(const Name& stream, const Tuple& t)
{
  std::set<int> changed;
  for (int i : m_postOrder) {
    const auto* n = m_nodes.at(i);
    if (!n->children.empty()) {
      continue;
    }
    const auto* s = m_ctx.catalog.findStream(std::get<Identifier>(n->params.at(0)).text);
    if (s != nullptr && s->name == stream) {
      m_evals.at(i)->ingest(t);
      changed.insert(i);
    }
  }
  return propagate(std::move(changed), t.ts);
}

std::vector<FragmentOutput>
QueryRuntime::onIntermediate(int childIndex, Relation r, Timestamp trigger)
{
  int parent = m_parent.count(childIndex) ? m_parent.at(childIndex) : -1;
  if (m_hosted.count(childIndex) || parent < 0 || !m_hosted.count(parent)) {
    m_lastWork = 0;
    m_lastKinds.clear();
    return {};
  }
  auto it = m_results.find(childIndex);
  if (it != m_results.end() && it->second == r) {
    m_lastWork = 0;
    m_lastKinds.clear();
    return {};
  }
  m_results[childIndex] = std::move(r);
  return propagate({childIndex}, trigger);
}

std::vector<FragmentOutput>
QueryRuntime::propagate(std::set<int> changed, Timestamp trigger)
{
  m_lastWork = 0;
  m_lastKinds.clear();
  std::vector<FragmentOutput> out;
  for (int i : m_postOrder) {
    const auto* n = m_nodes.at(i);
    bool leafChanged = n->children.empty() && changed.count(i);
    bool childChanged = false;
    bool ready = true;
    std::vector<const Relation*> inputs;
    for (const auto& c : n->children) {
      childChanged = childChanged || changed.count(c.index);
      auto r = m_results.find(c.index);
      if (r == m_results.end()) {
        ready = false;
      }
      else {
        inputs.push_back(&r->second);
      }
    }
    if (!(leafChanged || childChanged) || !ready) {
      continue;
    }
    auto& eval = *m_evals.at(i);
    Relation result = eval.evaluate(inputs);
    m_lastWork += eval.work();
    m_lastKinds.push_back(n->kind);
    auto prev = m_results.find(i);
    if (prev != m_results.end() && prev->second == result) {
      continue;
    }
    m_results[i] = std::move(result);
    changed.insert(i);
    int p = m_parent.at(i);
    if (p < 0 || !m_hosted.count(p)) {
      out.push_back({i, m_results[i], trigger});
    }
  }
  return out;
}

std::vector<std::pair<int, std::string>>
QueryRuntime::snapshots() const
{
  std::vector<std::pair<int, std::string>> out;
  for (int i : m_postOrder) {
    if (auto s = m_evals.at(i)->snapshot()) {
      out.emplace_back(i, std::move(*s));
    }
  }
  return out;
}

const Relation*
QueryRuntime::result(int index) const
{
  auto it = m_results.find(index);
  return it == m_results.end() ? nullptr : &it->second;
}

} // namespace cepnet
