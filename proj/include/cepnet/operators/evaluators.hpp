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

#ifndef CEPNET_OPERATORS_EVALUATORS_HPP
#define CEPNET_OPERATORS_EVALUATORS_HPP

#include "cepnet/operators/predict.hpp"
#include "cepnet/operators/relation.hpp"
#include "cepnet/query/catalog.hpp"
#include "cepnet/query/operator-tree.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cepnet {

/// Settings shared by the evaluators of one query.
struct EvalContext
{
  Catalog catalog = Catalog::defaults();
  CombineMode combine = CombineMode::Literal;
  Timestamp predictPeriodMs = 86'400'000;
  std::string queryHash;
};

/// Runtime behaviour of one operator instance.
class Evaluator
{
public:
  virtual ~Evaluator() = default;

  /// Raw stream input; only leaf operators accept it.
  virtual void
  ingest(const Tuple& t);

  /// Result given the current results of the children, left to right.
  virtual Relation
  evaluate(const std::vector<const Relation*>& inputs) = 0;

  /// Serialized operator state for the content store, if stateful.
  virtual std::optional<std::string>
  snapshot() const
  {
    return std::nullopt;
  }

  /// Rows touched by the last evaluate call.
  std::size_t
  work() const noexcept
  {
    return m_work;
  }

protected:
  std::size_t m_work = 0;
};

using EvaluatorFactory = std::function<std::unique_ptr<Evaluator>(const OperatorNode&, const EvalContext&)>;

/// Maps operator keywords to evaluator factories.
class EvaluatorRegistry
{
public:
  void
  add(const std::string& kind, EvaluatorFactory factory);

  /// Throws cepnet::Error for an unregistered kind.
  std::unique_ptr<Evaluator>
  create(const OperatorNode& node, const EvalContext& ctx) const;

  bool
  contains(const std::string& kind) const;

  static const EvaluatorRegistry&
  builtin();

  static EvaluatorRegistry
  makeBuiltin();

private:
  std::map<std::string, EvaluatorFactory> m_factories;
};

} // namespace cepnet

#endif // CEPNET_OPERATORS_EVALUATORS_HPP
