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

#ifndef CEPNET_OPERATORS_QUERY_RUNTIME_HPP
#define CEPNET_OPERATORS_QUERY_RUNTIME_HPP

#include "cepnet/operators/evaluators.hpp"
#include "cepnet/packet/name.hpp"

#include <map>
#include <memory>
#include <set>
#include <vector>

namespace cepnet {

/// Result of an operator at the top of a fragment.
struct FragmentOutput
{
  int index = 0;
  Relation relation;
  Timestamp trigger = 0; ///< newest input ts that led to this result
};

/// Evaluates the operators of one query hosted on a node. Inputs are raw
/// tuples for hosted windows and results of children hosted elsewhere.
/// Only operators downstream of a changed input are re-evaluated, and an
/// operator whose result did not change does not propagate further.
class QueryRuntime
{
public:
  QueryRuntime(OperatorNode tree, std::set<int> hosted, EvalContext ctx,
               const EvaluatorRegistry& registry = EvaluatorRegistry::builtin());

  const OperatorNode&
  tree() const noexcept
  {
    return m_tree;
  }

  const std::set<int>&
  hosted() const noexcept
  {
    return m_hosted;
  }

  /// Stream names feeding hosted windows.
  std::vector<Name>
  inputStreams() const;

  /// Children of hosted operators that run on other nodes.
  std::vector<int>
  remoteInputs() const;

  /// Hosted operators whose parent is not hosted, including a hosted root.
  std::vector<int>
  outputs() const;

  bool
  hostsRoot() const
  {
    return m_hosted.count(0) > 0;
  }

  /// Throws OutOfOrderTuple when a window receives an older tuple.
  std::vector<FragmentOutput>
  onTuple(const Name& stream, const Tuple& t);

  std::vector<FragmentOutput>
  onIntermediate(int childIndex, Relation r, Timestamp trigger);

  /// Rows touched by the last onTuple/onIntermediate call.
  std::size_t
  lastWork() const noexcept
  {
    return m_lastWork;
  }

  /// Operators evaluated by the last call.
  std::size_t
  lastEvaluated() const noexcept
  {
    return m_lastKinds.size();
  }

  /// Kinds of the operators evaluated by the last call, in evaluation order.
  const std::vector<std::string>&
  lastEvaluatedKinds() const noexcept
  {
    return m_lastKinds;
  }

  /// Serialized state of hosted stateful operators.
  std::vector<std::pair<int, std::string>>
  snapshots() const;

  const Relation*
  result(int index) const;

private:
  std::vector<FragmentOutput>
  propagate(std::set<int> changed, Timestamp trigger);

  OperatorNode m_tree;
  std::set<int> m_hosted;
  EvalContext m_ctx;
  std::map<int, const OperatorNode*> m_nodes;
  std::map<int, int> m_parent;
  std::vector<int> m_postOrder; ///< hosted operators, children first
  std::map<int, std::unique_ptr<Evaluator>> m_evals;
  std::map<int, Relation> m_results;
  std::size_t m_lastWork = 0;
  std::vector<std::string> m_lastKinds;
};

} // namespace cepnet

#endif // CEPNET_OPERATORS_QUERY_RUNTIME_HPP
