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

#include "cepnet/engine/node.hpp"
#include "cepnet/operators/window.hpp"
#include "cepnet/query/normalize.hpp"
#include "cepnet/query/parser.hpp"
#include "cepnet/tables/dump.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

namespace cepnet {

const char*
to_string(Disposition d) noexcept
{
  switch (d) {
    case Disposition::Consumed: return "consumed";
    case Disposition::Forwarded: return "forwarded";
    case Disposition::Dropped: return "dropped";
  }
  return "?";
}

Name
query_result_name(const NodeId& node, const std::string& hash)
{
  return Name({"node", node, "query", hash});
}

Name
state_output_name(const std::string& hash, int operatorIndex)
{
  return Name({"state", hash, std::to_string(operatorIndex), "out"});
}

Name
state_buffer_name(const std::string& hash, int operatorIndex)
{
  return Name({"state", hash, std::to_string(operatorIndex)});
}

namespace {

std::optional<std::pair<std::string, int>>
parse_state_output(const Name& name)
{
  if (name.size() != 4 || name.at(0) != "state" || name.at(3) != "out") {
    return std::nullopt;
  }
  try {
    return std::make_pair(name.at(1), std::stoi(name.at(2)));
  }
  catch (const std::exception&) {
    return std::nullopt;
  }
}

void
append_unique(std::vector<FaceId>& faces, FaceId f)
{
  if (std::find(faces.begin(), faces.end(), f) == faces.end()) {
    faces.push_back(f);
  }
}

} // namespace

Node::Node(NodeConfig config)
  : m_config(std::move(config))
  , m_cs(m_config.csCapacity)
{
}

Face&
Node::addFace(FaceId id, std::string peer, FaceKind kind, std::optional<std::size_t> outstandingCap)
{
  auto [it, fresh] =
    m_faces.try_emplace(id, id, std::move(peer), kind, outstandingCap.value_or(m_config.outstandingCap));
  if (!fresh) {
    throw Error("face " + std::to_string(id) + " already exists on " + m_config.id);
  }
  return it->second;
}

Face*
Node::face(FaceId id)
{
  auto it = m_faces.find(id);
  return it == m_faces.end() ? nullptr : &it->second;
}

std::size_t
Node::hostedOperators() const
{
  std::size_t n = 0;
  for (const auto& [_, q] : m_queries) {
    if (q.runtime) {
      n += q.runtime->hosted().size();
    }
  }
  return n;
}

void
Node::observeQueueing(double ms)
{
  m_queueEma = m_config.queueEmaAlpha * ms + (1 - m_config.queueEmaAlpha) * m_queueEma;
}

const QueryState*
Node::query(const std::string& key) const
{
  auto it = m_queries.find(key);
  return it == m_queries.end() ? nullptr : &it->second;
}

Outcome
Node::handle(FaceId in, const Packet& packet)
{
  ++m_counters.in[type_of(packet)];
  Outcome out = std::visit(
    [&](const auto& p) -> Outcome {
      using T = std::decay_t<decltype(p)>;
      if constexpr (std::is_same_v<T, Interest>) {
        return onInterest(in, p);
      }
      else if constexpr (std::is_same_v<T, Data>) {
        return onData(in, p);
      }
      else if constexpr (std::is_same_v<T, DataStream>) {
        return onDataStream(in, p);
      }
      else if constexpr (std::is_same_v<T, AddQueryInterest>) {
        return onAddQuery(in, p);
      }
      else {
        return onRemoveQuery(in, p);
      }
    },
    packet);

  switch (out.disposition) {
    case Disposition::Consumed: ++m_counters.consumed; break;
    case Disposition::Forwarded: ++m_counters.forwarded; break;
    case Disposition::Dropped: ++m_counters.dropped; break;
  }
  for (const auto& s : out.sends) {
    ++m_counters.out[type_of(s.packet)];
  }
  return out;
}

Outcome
Node::onInterest(FaceId in, const Interest& interest)
{
  Outcome out;
  if (interest.name == Name({"node", m_config.id, "delay"})) {
    char payload[96];
    std::snprintf(payload, sizeof payload, "delay_ms=%.6f;operators=%zu", advertisedDelayMs(), hostedOperators());
    out.sends.push_back({in, Data{interest.name, payload, m_clock}});
    out.disposition = Disposition::Consumed;
    out.note = "delay";
    return out;
  }
  if (auto hit = m_cs.lookupPrefix(interest.name)) {
    out.sends.push_back({in, Data{Name::parse(hit->key), hit->payload, hit->logicalTs}});
    out.disposition = Disposition::Consumed;
    out.note = "cs-hit";
    return out;
  }
  std::string key = interest.name.toUri();
  if (const auto* entry = m_pit.lookup(key); entry != nullptr && entry->kind == PitKind::Name) {
    bool added = m_pit.addFace(key, in, PitKind::Name, m_clock);
    out.disposition = added ? Disposition::Consumed : Disposition::Dropped;
    out.note = added ? "pit-aggregate" : "pit-duplicate";
    return out;
  }
  auto route = m_fib.longestPrefix(interest.name);
  if (!route) {
    out.note = "no-route";
    return out;
  }
  m_pit.addFace(key, in, PitKind::Name, m_clock);
  for (FaceId f : route->faces) {
    if (f != in) {
      out.sends.push_back({f, interest});
    }
  }
  out.disposition = out.sends.empty() ? Disposition::Consumed : Disposition::Forwarded;
  out.note = "forward";
  return out;
}

Outcome
Node::onData(FaceId in, const Data& data)
{
  Outcome out;
  std::vector<FaceId> faces;
  std::vector<std::string> satisfied;
  for (const auto& [key, entry] : m_pit.entries()) {
    if (entry.kind != PitKind::Name) {
      continue;
    }
    Name prefix = Name::parse(key);
    if (prefix.isPrefixOf(data.name)) {
      satisfied.push_back(key);
      for (FaceId f : entry.faces) {
        if (f != in) {
          append_unique(faces, f);
        }
      }
    }
  }
  if (satisfied.empty()) {
    out.note = "unsolicited";
    return out;
  }
  for (const auto& key : satisfied) {
    m_pit.remove(key);
  }
  m_cs.insert(data.name.toUri(), data.payload, data.ts);
  for (FaceId f : faces) {
    out.sends.push_back({f, data});
  }
  out.disposition = out.sends.empty() ? Disposition::Consumed : Disposition::Forwarded;
  out.note = "satisfy";
  return out;
}

Outcome
Node::onDataStream(FaceId in, const DataStream& ds)
{
  Outcome out;
  bool consumed = false;
  const std::string streamUri = ds.streamName.toUri();
  auto intermediate = parse_state_output(ds.streamName);
  if (!intermediate) {
    auto [seen, inserted] = m_streamNewest.emplace(streamUri, ds.tuple.ts);
    if (!inserted) {
      seen->second = std::max(seen->second, ds.tuple.ts);
    }
  }

  for (auto& [key, q] : m_queries) {
    if (!q.runtime) {
      continue;
    }
    PitEntry* entry = m_pit.lookup(key);
    if (entry == nullptr) {
      continue;
    }
    std::vector<FragmentOutput> outputs;
    bool relevant = false;
    if (intermediate) {
      if (intermediate->first != q.hash) {
        continue;
      }
      auto remote = q.runtime->remoteInputs();
      if (std::find(remote.begin(), remote.end(), intermediate->second) == remote.end()) {
        continue;
      }
      relevant = true;
    }
    else {
      auto streams = q.runtime->inputStreams();
      relevant = std::find(streams.begin(), streams.end(), ds.streamName) != streams.end();
    }
    if (!relevant) {
      continue;
    }
    auto last = entry->lastStreamTs.find(streamUri);
    if (last != entry->lastStreamTs.end() && ds.tuple.ts <= last->second) {
      out.note = "stale";
      continue;
    }
    entry->lastStreamTs[streamUri] = ds.tuple.ts;
    consumed = true;

    Timestamp trigger = ds.tuple.ts;
    try {
      if (intermediate) {
        if (ds.tuple.values.size() != 3) {
          continue;
        }
        trigger = static_cast<Timestamp>(as_number(ds.tuple.values[1]).value_or(0));
        const auto* text = std::get_if<std::string>(&ds.tuple.values[2]);
        if (text == nullptr) {
          continue;
        }
        outputs = q.runtime->onIntermediate(intermediate->second, relation_from_json(*text), trigger);
      }
      else {
        outputs = q.runtime->onTuple(ds.streamName, ds.tuple);
      }
    }
    catch (const OutOfOrderTuple&) {
      ++m_counters.outOfOrder;
      continue;
    }
    q.newestInputTs = std::max(q.newestInputTs, trigger);
    out.work += q.runtime->lastWork();
    const auto& kinds = q.runtime->lastEvaluatedKinds();
    out.evaluated.insert(out.evaluated.end(), kinds.begin(), kinds.end());
    if (!kinds.empty()) {
      for (auto& [idx, snapshot] : q.runtime->snapshots()) {
        m_cs.insert(state_buffer_name(q.hash, idx).toUri(), std::move(snapshot), q.newestInputTs);
      }
    }
    dispatch(q, *entry, outputs, out);
    if (q.runtime->hostsRoot()) {
      if (auto cached = m_cs.lookup(q.key); cached && cached->logicalTs < q.newestInputTs) {
        m_cs.insert(q.key, cached->payload, q.newestInputTs);
      }
    }
  }

  bool forwarded = false;
  if (auto route = m_streamFib.longestPrefix(ds.streamName)) {
    for (FaceId f : route->faces) {
      if (f != in) {
        out.sends.push_back({f, ds});
        forwarded = true;
      }
    }
  }
  out.disposition = forwarded ? Disposition::Forwarded : consumed ? Disposition::Consumed : Disposition::Dropped;
  if (out.note.empty()) {
    out.note = forwarded ? "forward" : consumed ? "evaluate" : "no-consumer";
  }
  return out;
}

void
Node::dispatch(QueryState& q, PitEntry& entry, const std::vector<FragmentOutput>& outputs, Outcome& out)
{
  for (const auto& o : outputs) {
    if (o.index != 0) {
      Timestamp seq = ++q.outputSeq[o.index];
      Name name = state_output_name(q.hash, o.index);
      Tuple t{seq, "state", {static_cast<double>(seq), static_cast<double>(o.trigger), relation_to_json(o.relation)}};
      if (auto route = m_streamFib.longestPrefix(name)) {
        for (FaceId f : route->faces) {
          out.sends.push_back({f, DataStream{name, t}});
        }
      }
      continue;
    }

    std::string payload = relation_to_json(o.relation);
    m_cs.insert(q.key, payload, q.newestInputTs);
    auto newest = o.relation.newestTs();
    if (!newest || *newest <= entry.lastResultTs) {
      continue;
    }
    entry.lastResultTs = *newest;
    Name name = query_result_name(m_config.id, q.hash);
    bool asData = q.tree.format == Format::Data;
    for (FaceId f : entry.faces) {
      if (asData) {
        out.sends.push_back({f, Data{name, payload, *newest}});
      }
      else {
        out.sends.push_back(
          {f, DataStream{name, Tuple{*newest, "result", {static_cast<double>(*newest), payload}}}});
      }
      ++m_counters.notifications;
    }
  }
}

QueryState&
Node::createState(const std::string& key, const OperatorNode& tree)
{
  auto& q = m_queries[key];
  q.key = key;
  q.hash = query_hash(key);
  q.tree = tree;
  auto& inputs = m_queryInputs[key];
  inputs.clear();
  for (const auto& alias : stream_aliases(tree)) {
    if (const auto* binding = m_config.eval.catalog.findStream(alias)) {
      inputs.push_back(binding->name.toUri());
    }
  }
  return q;
}

Outcome
Node::onAddQuery(FaceId in, const AddQueryInterest& qi)
{
  Outcome out;
  const std::string key = normalize_query(qi.query);

  Timestamp minTs = 0;
  if (const auto* q = query(key)) {
    minTs = std::max<Timestamp>(minTs, q->newestInputTs);
  }
  if (auto inputs = m_queryInputs.find(key); inputs != m_queryInputs.end()) {
    for (const auto& uri : inputs->second) {
      if (auto seen = m_streamNewest.find(uri); seen != m_streamNewest.end()) {
        minTs = std::max(minTs, seen->second);
      }
    }
  }
  if (auto hit = m_cs.lookup(key, minTs)) {
    out.sends.push_back({in, Data{query_result_name(m_config.id, query_hash(key)), hit->payload, hit->logicalTs}});
    out.disposition = Disposition::Consumed;
    out.note = "cs-hit";
    return out;
  }
  if (const auto* entry = m_pit.lookup(key); entry != nullptr && entry->kind == PitKind::Query) {
    bool added = m_pit.addFace(key, in, PitKind::Query, m_clock);
    auto it = m_queries.find(key);
    if (!added && it != m_queries.end() && it->second.deployPending) {
      it->second.deployPending = false;
      for (FaceId f : it->second.upstreamFaces) {
        if (f != in) {
          out.sends.push_back({f, qi});
        }
      }
      out.disposition = out.sends.empty() ? Disposition::Consumed : Disposition::Forwarded;
      out.note = "deploy";
      return out;
    }
    out.disposition = added ? Disposition::Consumed : Disposition::Dropped;
    out.note = added ? "pit-add" : "pit-duplicate";
    return out;
  }

  OperatorNode tree;
  auto start = std::chrono::steady_clock::now();
  try {
    tree = create_operator_graph(qi.query, m_config.eval.catalog);
  }
  catch (const QueryError& e) {
    out.sends.push_back({in, Data{Name({"nack", std::to_string(qi.nonce)}), e.what(), m_clock}});
    out.disposition = Disposition::Consumed;
    out.note = "nack";
    ++m_counters.nacks;
    return out;
  }
  out.parseMicros =
    std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();

  std::vector<FaceId> fibFaces;
  for (const auto& alias : stream_aliases(tree)) {
    const auto* binding = m_config.eval.catalog.findStream(alias);
    auto route = binding ? m_fib.longestPrefix(binding->name) : std::nullopt;
    if (!route) {
      out.note = "no-route";
      return out;
    }
    for (FaceId f : route->faces) {
      if (f != in) {
        append_unique(fibFaces, f);
      }
    }
  }

  m_pit.addFace(key, in, PitKind::Query, m_clock);
  QueryState& q = createState(key, tree);
  q.coordinator = true;
  out.coordinated = key;

  CoordinationResult plan;
  if (m_coordinator) {
    plan = m_coordinator(*this, key, q.tree, in);
  }
  else {
    for_each_preorder(q.tree, [&](const OperatorNode& n, int) { plan.localOperators.insert(n.index); });
    plan.upstreamFaces = fibFaces;
  }
  if (!plan.localOperators.empty()) {
    EvalContext ctx = m_config.eval;
    ctx.queryHash = q.hash;
    q.runtime = std::make_unique<QueryRuntime>(q.tree, plan.localOperators, std::move(ctx));
  }
  for (FaceId f : plan.upstreamFaces) {
    if (f != in) {
      append_unique(q.upstreamFaces, f);
      out.sends.push_back({f, qi});
    }
  }
  out.disposition = out.sends.empty() ? Disposition::Consumed : Disposition::Forwarded;
  out.note = "coordinate";
  return out;
}

Outcome
Node::onRemoveQuery(FaceId in, const RemoveQueryInterest& rq)
{
  Outcome out;
  const std::string key = normalize_query(rq.query);
  const auto* entry = m_pit.lookup(key);
  if (entry == nullptr || entry->kind != PitKind::Query || !entry->faces.count(in)) {
    out.note = "unknown-query";
    return out;
  }
  m_pit.removeFace(key, in);
  if (m_pit.lookup(key) != nullptr) {
    out.disposition = Disposition::Consumed;
    out.note = "face-removed";
    return out;
  }
  std::vector<FaceId> upstream;
  if (const auto* q = query(key)) {
    upstream = q->upstreamFaces;
  }
  teardown(key);
  for (FaceId f : upstream) {
    if (f != in) {
      out.sends.push_back({f, rq});
    }
  }
  out.disposition = out.sends.empty() ? Disposition::Consumed : Disposition::Forwarded;
  out.note = "entry-removed";
  return out;
}

void
Node::teardown(const std::string& key)
{
  auto it = m_queries.find(key);
  if (it == m_queries.end()) {
    return;
  }
  for (const auto& [prefix, face] : it->second.routes) {
    m_streamFib.removeRoute(prefix, face);
  }
  m_queries.erase(it);
}

void
Node::installFragment(const std::string& key, const OperatorNode& tree, const std::set<int>& hosted,
                      std::optional<FaceId> downstream, std::vector<FaceId> upstream)
{
  if (downstream) {
    m_pit.addFace(key, *downstream, PitKind::Query, m_clock);
  }
  auto it = m_queries.find(key);
  QueryState& q = it != m_queries.end() ? it->second : createState(key, tree);
  for (FaceId f : upstream) {
    append_unique(q.upstreamFaces, f);
  }
  q.deployPending = downstream.has_value();
  if (!hosted.empty() && !q.runtime) {
    EvalContext ctx = m_config.eval;
    ctx.queryHash = q.hash;
    q.runtime = std::make_unique<QueryRuntime>(q.tree, hosted, std::move(ctx));
  }
}

void
Node::addStreamRoute(const std::string& key, const Name& prefix, FaceId face)
{
  auto it = m_queries.find(key);
  if (it == m_queries.end()) {
    throw Error("no query state for stream route on " + m_config.id);
  }
  m_streamFib.addRoute(prefix, face);
  it->second.routes.emplace_back(prefix, face);
}

std::string
dump_node(const Node& node)
{
  std::string out = "# node " + node.id() + " at t=" + std::to_string(node.clock()) + "\n";
  out += "[cs]\n" + dump_csv(node.cs());
  out += "[pit]\n" + dump_csv(node.pit());
  out += "[fib]\n" + dump_csv(node.fib());
  out += "[stream-fib]\n" + dump_csv(node.streamFib());
  return out;
}

} // namespace cepnet
