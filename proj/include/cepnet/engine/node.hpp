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

#ifndef CEPNET_ENGINE_NODE_HPP
#define CEPNET_ENGINE_NODE_HPP

#include "cepnet/engine/face.hpp"
#include "cepnet/operators/query-runtime.hpp"
#include "cepnet/tables/content-store.hpp"
#include "cepnet/tables/fib.hpp"
#include "cepnet/tables/pit.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cepnet {

/// What happened to an incoming packet. Every packet gets exactly one.
enum class Disposition { Consumed, Forwarded, Dropped };

const char*
to_string(Disposition d) noexcept;

struct Send
{
  FaceId face;
  Packet packet;
};

/// Effects of handling one packet.
struct Outcome
{
  Disposition disposition = Disposition::Dropped;
  std::vector<Send> sends;
  std::string note;                  ///< short reason, e.g. "cs-hit"
  std::vector<std::string> evaluated; ///< operator kinds evaluated
  std::size_t work = 0;              ///< rows touched by operators
  std::optional<std::string> coordinated; ///< query key if this node became coordinator
  double parseMicros = 0;            ///< measured operator-graph creation time
};

struct NodeConfig
{
  NodeId id;
  double processingDelayMs = 0.5;
  std::optional<std::size_t> csCapacity;
  std::size_t outstandingCap = 64;
  double queueEmaAlpha = 0.2;
  EvalContext eval;
};

struct NodeCounters
{
  std::map<PacketType, std::uint64_t> in;
  std::map<PacketType, std::uint64_t> out;
  std::uint64_t consumed = 0;
  std::uint64_t forwarded = 0;
  std::uint64_t dropped = 0;
  std::uint64_t notifications = 0;
  std::uint64_t nacks = 0;
  std::uint64_t outOfOrder = 0;
};

/// Per-query state on a node: the operators it hosts, the faces the query
/// was forwarded on and the stream routes installed for it.
struct QueryState
{
  std::string key;  ///< normalized query text
  std::string hash;
  OperatorNode tree;
  std::unique_ptr<QueryRuntime> runtime;
  std::vector<FaceId> upstreamFaces;
  std::vector<std::pair<Name, FaceId>> routes;
  bool coordinator = false;
  bool deployPending = false; ///< installed ahead of the query packet that carries it
  Timestamp newestInputTs = -1;
  std::map<int, Timestamp> outputSeq;
};

class Node;

/// Operators to host locally and faces to forward the query on, decided when
/// a node becomes coordinator of a query.
struct CoordinationResult
{
  std::set<int> localOperators;
  std::vector<FaceId> upstreamFaces;
};

using Coordinator =
  std::function<CoordinationResult(Node& self, const std::string& key, OperatorNode& tree, FaceId consumer)>;

/// Name under which a node publishes results of a query it coordinates.
Name
query_result_name(const NodeId& node, const std::string& hash);

/// Name of the intermediate result stream of one operator.
Name
state_output_name(const std::string& hash, int operatorIndex);

/// Name under which a stateful operator's buffer is mirrored in the CS.
Name
state_buffer_name(const std::string& hash, int operatorIndex);

/// Broker data plane: classic Interest/Data forwarding plus standing query
/// interests evaluated against pushed data streams.
class Node
{
public:
  explicit Node(NodeConfig config);

  const NodeId&
  id() const noexcept
  {
    return m_config.id;
  }

  const NodeConfig&
  config() const noexcept
  {
    return m_config;
  }

  Face&
  addFace(FaceId id, std::string peer, FaceKind kind, std::optional<std::size_t> outstandingCap = std::nullopt);

  Face*
  face(FaceId id);

  const std::map<FaceId, Face>&
  faces() const noexcept
  {
    return m_faces;
  }

  ContentStore&
  cs() noexcept
  {
    return m_cs;
  }

  const ContentStore&
  cs() const noexcept
  {
    return m_cs;
  }

  Pit&
  pit() noexcept
  {
    return m_pit;
  }

  const Pit&
  pit() const noexcept
  {
    return m_pit;
  }

  /// Routes toward producers.
  Fib&
  fib() noexcept
  {
    return m_fib;
  }

  const Fib&
  fib() const noexcept
  {
    return m_fib;
  }

  /// Routes toward downstream consumers of streams.
  Fib&
  streamFib() noexcept
  {
    return m_streamFib;
  }

  const Fib&
  streamFib() const noexcept
  {
    return m_streamFib;
  }

  void
  setClock(Timestamp nowMs) noexcept
  {
    m_clock = nowMs;
  }

  Timestamp
  clock() const noexcept
  {
    return m_clock;
  }

  /// Without a coordinator every operator of a new query runs here and the
  /// query is forwarded on the FIB faces of its streams.
  void
  setCoordinator(Coordinator coordinator)
  {
    m_coordinator = std::move(coordinator);
  }

  Outcome
  handle(FaceId in, const Packet& packet);

  /// Installs the part of a query placed on this node. `downstream` is the
  /// face toward the coordinator; it becomes the PIT face of the entry. The
  /// query packet arriving on that face afterwards is passed on upstream.
  void
  installFragment(const std::string& key, const OperatorNode& tree, const std::set<int>& hosted,
                  std::optional<FaceId> downstream, std::vector<FaceId> upstream);

  /// Stream route owned by a query, withdrawn when the query goes away.
  void
  addStreamRoute(const std::string& key, const Name& prefix, FaceId face);

  const QueryState*
  query(const std::string& key) const;

  const std::map<std::string, QueryState>&
  queries() const noexcept
  {
    return m_queries;
  }

  std::size_t
  hostedOperators() const;

  /// Processing delay plus the moving average of observed queueing delay.
  double
  advertisedDelayMs() const noexcept
  {
    return m_config.processingDelayMs + m_queueEma;
  }

  void
  observeQueueing(double ms);

  const NodeCounters&
  counters() const noexcept
  {
    return m_counters;
  }

private:
  Outcome
  onInterest(FaceId in, const Interest& i);

  Outcome
  onData(FaceId in, const Data& d);

  Outcome
  onDataStream(FaceId in, const DataStream& ds);

  Outcome
  onAddQuery(FaceId in, const AddQueryInterest& qi);

  Outcome
  onRemoveQuery(FaceId in, const RemoveQueryInterest& qi);

  void
  dispatch(QueryState& q, PitEntry& entry, const std::vector<FragmentOutput>& outputs, Outcome& out);

  void
  teardown(const std::string& key);

  QueryState&
  createState(const std::string& key, const OperatorNode& tree);

  NodeConfig m_config;
  std::map<FaceId, Face> m_faces;
  ContentStore m_cs;
  Pit m_pit;
  Fib m_fib;
  Fib m_streamFib;
  Timestamp m_clock = 0;
  Coordinator m_coordinator;
  std::map<std::string, QueryState> m_queries;
  std::map<std::string, std::vector<std::string>> m_queryInputs; ///< query key -> raw stream URIs
  std::map<std::string, Timestamp> m_streamNewest;               ///< raw stream URI -> newest ts seen
  NodeCounters m_counters;
  double m_queueEma = 0;
};

/// Node dump file: [cs], [pit], [fib] and [stream-fib] sections.
std::string
dump_node(const Node& node);

} // namespace cepnet

#endif // CEPNET_ENGINE_NODE_HPP
